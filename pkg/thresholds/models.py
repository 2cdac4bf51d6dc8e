"""
Models for resumable exhaustive verification runs.
"""
from django.db import models


class VerificationRun(models.Model):
    """One exhaustive pass over the codes on n vertices."""

    MODE_CHOICES = [
        ('max-matchings', 'Most matchings'),
        ('min-indsets', 'Fewest independent sets'),
        ('conjecture', 'Matchings of each size'),
    ]

    STATUS_CHOICES = [
        ('running', 'Running'),
        ('passed', 'Passed'),
        ('failed', 'Failed'),
    ]

    n = models.PositiveIntegerField(help_text="Number of vertices")
    mode = models.CharField(max_length=20, choices=MODE_CHOICES, help_text="Check being run")
    prefix_length = models.PositiveIntegerField(help_text="Length of the code prefixes work is split by")
    status = models.CharField(
        max_length=20,
        choices=STATUS_CHOICES,
        default='running',
        help_text="Run status"
    )
    failure_count = models.PositiveIntegerField(default=0, help_text="Counterexamples found")
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        ordering = ['-created_at']
        verbose_name = 'Verification Run'
        verbose_name_plural = 'Verification Runs'

    def __str__(self):
        return f"{self.mode} n={self.n} ({self.status})"


class PrefixResult(models.Model):
    """Statistics for the codes of a run that start with one prefix."""

    run = models.ForeignKey(
        VerificationRun,
        on_delete=models.CASCADE,
        related_name='prefixes',
        help_text="Parent run"
    )
    prefix = models.CharField(max_length=64, blank=True, help_text="Leading stored digits")
    code_count = models.PositiveIntegerField(help_text="Number of codes under the prefix")
    stats = models.JSONField(default=list, help_text="Per edge count statistics")
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        ordering = ['run', 'prefix']
        unique_together = ['run', 'prefix']
        verbose_name = 'Prefix Result'
        verbose_name_plural = 'Prefix Results'

    def __str__(self):
        return f"{self.run} - prefix {self.prefix or '(empty)'}"
