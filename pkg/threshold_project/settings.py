"""
Django settings for the threshold-codes project.
"""

import os
from pathlib import Path

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('DJANGO_SECRET_KEY', 'django-insecure-threshold-codes-key')

DEBUG = os.environ.get('DEBUG', 'False').lower() == 'true'

ALLOWED_HOSTS = []

# Application definition
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',
    'rest_framework',
    'thresholds',
]

# Database
DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.environ.get('THRESHOLD_DB_PATH', BASE_DIR / 'db.sqlite3'),
    }
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

# Default primary key field type
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# REST Framework configuration (serializers only, no API views)
REST_FRAMEWORK = {
    'COERCE_DECIMAL_TO_STRING': True,
    'UNAUTHENTICATED_USER': None,
}

# Logging goes to stderr
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'stderr': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'thresholds': {
            'handlers': ['stderr'],
            'level': os.environ.get('THRESHOLD_LOG_LEVEL', 'INFO'),
            'propagate': False,
        },
    },
}

# Brute-force oracle limits (vertex counts)
ORACLE_MATCHING_LIMIT = int(os.environ.get('THRESHOLD_ORACLE_MATCHING_LIMIT', '12'))
ORACLE_INDEPENDENCE_LIMIT = int(os.environ.get('THRESHOLD_ORACLE_INDEPENDENCE_LIMIT', '24'))

# Exhaustive verification
VERIFY_WORKERS = int(os.environ.get('THRESHOLD_WORKERS', '1'))
VERIFY_PREFIX_LENGTH = int(os.environ.get('THRESHOLD_PREFIX_LENGTH', '4'))
VERIFY_MAX_WITNESSES = 8  # witness codes kept per (n, e) record

# Local move reductions
MAX_REWRITE_STEPS = 10000

# Report files
REPORT_DIR = Path(os.environ.get('THRESHOLD_REPORT_DIR', BASE_DIR / 'reports'))
