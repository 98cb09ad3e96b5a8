"""
Django settings for the nilpotent_completion project.

The project has no web surface and no database; Django provides settings,
management commands, form validation and the test runner.

For the full list of settings and their values, see
https://docs.djangoproject.com/en/4.2/ref/settings/
"""

import os

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.environ.get('NC_SECRET_KEY', 'nilpotent-completion-local-key')

DEBUG = False

ALLOWED_HOSTS = []

# Application definition

INSTALLED_APPS = [
    'completion.apps.CompletionConfig',
]

# No persistence: every value is computed from the command line.

DATABASES = {}

# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

# Completion defaults; command-line flags override them.

NILPOTENT_COMPLETION = {
    'RING': os.environ.get('NC_RING', 'Q[t]'),
    'GROUP': os.environ.get('NC_GROUP', 'free2:2'),
    'STRATEGY': 'auto',
    'FACTOR_DEGREE_BOUND': int(os.environ.get('NC_FACTOR_DEGREE_BOUND', 6)),
    'S_BASIS': 'std',
    'SEED': int(os.environ.get('NC_SEED', 0)),
    'CASES': int(os.environ.get('NC_CASES', 100)),
    'ORACLE_EXPONENT_BOUND': 8,
    'OUTPUT_FORMAT': 'text',
}

# Logging
# https://docs.djangoproject.com/en/4.2/topics/logging/

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'completion': {
            'handlers': ['console'],
            'level': os.environ.get('NC_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}
