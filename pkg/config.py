import os

from dotenv import load_dotenv

load_dotenv()


def _env_bool(name, default):
    return os.environ.get(name, str(default)).lower() in ('1', 'true', 'yes')


class Config:
    """Base configuration class"""
    ENGINE_VERSION = os.environ.get('ENGINE_VERSION') or '1.0.0'

    # Result cache
    KH_CACHE_DIR = os.path.expanduser(os.environ.get('KH_CACHE_DIR') or '~/.cache/khbranch')
    KH_CACHE_ENABLED = _env_bool('KH_CACHE_ENABLED', True)

    # Engine limits
    KH_MAX_GENERATORS = int(os.environ.get('KH_MAX_GENERATORS', 4_000_000))
    KH_ORACLE_MAX_CROSSINGS = int(os.environ.get('KH_ORACLE_MAX_CROSSINGS', 16))
    BRACKET_MAX_CROSSINGS = int(os.environ.get('BRACKET_MAX_CROSSINGS', 16))
    KH_THREADS = int(os.environ.get('KH_THREADS', 1))

    VERIFY_DEFAULT_TIER = int(os.environ.get('VERIFY_DEFAULT_TIER', 2))
    LES_HTTP_MAX_N = int(os.environ.get('LES_HTTP_MAX_N', 3))
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'INFO').upper()

    # CORS Configuration
    CORS_ORIGINS = os.environ.get('CORS_ORIGINS', '*').split(',')


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    LOG_LEVEL = os.environ.get('LOG_LEVEL', 'DEBUG').upper()


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    KH_CACHE_ENABLED = False


config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': ProductionConfig
}

_active = config[os.environ.get('KH_ENV', 'default')]
_overrides = {}


def use_config(name):
    """Select the configuration class used outside a Flask request"""
    global _active
    _active = config[name]
    _overrides.clear()


def override(**settings):
    """Command-line flags win over the configuration class"""
    _overrides.update({k: v for k, v in settings.items() if v is not None})


def get_setting(name):
    if name in _overrides:
        return _overrides[name]
    try:
        from flask import current_app, has_app_context
        if has_app_context() and name in current_app.config:
            return current_app.config[name]
    except ImportError:
        pass
    return getattr(_active, name)
