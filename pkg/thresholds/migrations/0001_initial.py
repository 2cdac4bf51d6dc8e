# Generated by Django 5.2.1

from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveIntegerField(help_text='Number of vertices')),
                ('mode', models.CharField(choices=[('max-matchings', 'Most matchings'), ('min-indsets', 'Fewest independent sets'), ('conjecture', 'Matchings of each size')], help_text='Check being run', max_length=20)),
                ('prefix_length', models.PositiveIntegerField(help_text='Length of the code prefixes work is split by')),
                ('status', models.CharField(choices=[('running', 'Running'), ('passed', 'Passed'), ('failed', 'Failed')], default='running', help_text='Run status', max_length=20)),
                ('failure_count', models.PositiveIntegerField(default=0, help_text='Counterexamples found')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Verification Run',
                'verbose_name_plural': 'Verification Runs',
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='PrefixResult',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('prefix', models.CharField(blank=True, help_text='Leading stored digits', max_length=64)),
                ('code_count', models.PositiveIntegerField(help_text='Number of codes under the prefix')),
                ('stats', models.JSONField(default=list, help_text='Per edge count statistics')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('run', models.ForeignKey(help_text='Parent run', on_delete=django.db.models.deletion.CASCADE, related_name='prefixes', to='thresholds.verificationrun')),
            ],
            options={
                'verbose_name': 'Prefix Result',
                'verbose_name_plural': 'Prefix Results',
                'ordering': ['run', 'prefix'],
            },
        ),
        migrations.AlterUniqueTogether(
            name='prefixresult',
            unique_together={('run', 'prefix')},
        ),
    ]
