"""
This configuration parser takes a profile argument and uses that for the sections of the config file
i.e. default, fast, thorough

Use the typed get methods for the setting you need; the active profile is used unless a section is given.
Options missing from a profile fall back to the `default` section, which holds the built-in defaults.
"""
import codecs
from collections import namedtuple
from configparser import ConfigParser
from .exceptions import ConfigurationError

__author__ = 'topicalcore authors'

DEFAULT_PROFILE = 'default'

DEFAULTS = {
    'tol': '1e-9',
    'k_max': '10000',
    'd_cap': '1e6',
    'seed': '0',
    'samples': '1000',
    'radius': '10.0',
    'probe_scale': '65536',
    'trials': '32',
    'exhaustive_max_dim': '16',
}

BUILTIN_PROFILES = {
    'fast': {
        'tol': '1e-7',
        'k_max': '2000',
        'samples': '200',
        'trials': '8',
    },
    'thorough': {
        'tol': '1e-11',
        'k_max': '100000',
        'samples': '10000',
        'trials': '128',
    },
}


class Settings(namedtuple('Settings', 'tol k_max d_cap seed samples radius probe_scale trials exhaustive_max_dim')):
    __slots__ = ()


class CustomConfigParser(ConfigParser):
    def __init__(self, profile=DEFAULT_PROFILE, *args, **kwargs):
        self.profile = profile
        kwargs.setdefault('default_section', DEFAULT_PROFILE)
        kwargs.setdefault('interpolation', None)
        ConfigParser.__init__(self, *args, **kwargs)

    def get(self, option, section=None, raw=False, vars=None, **kwargs):
        if section is None:
            section = self.profile
        return ConfigParser.get(self, section, option, raw=raw, vars=vars, **kwargs)

    def getint(self, option, section=None):
        return int(self.get(option=option, section=section))

    def getfloat(self, option, section=None):
        return float(self.get(option=option, section=section))

    def getboolean(self, option, section=None):
        v = self.get(option=option, section=section)
        if v.lower() not in self.BOOLEAN_STATES:
            raise ValueError('Not a boolean: {}'.format(v))
        return self.BOOLEAN_STATES[v.lower()]

    def getlist(self, option, section=None):
        setting = self.get(option=option, section=section)
        return [item.strip() for item in setting.split(',') if item.strip()]

    def has_profile(self, profile):
        return profile == self.default_section or self.has_section(profile)


def load_config(config_file_path=None, profile=DEFAULT_PROFILE, **kwargs):
    """
    Built-in defaults and profiles, overlaid with `config_file_path` when given.

    :raises ConfigurationError: the profile is neither built in nor defined in the file
    """
    config_instance = CustomConfigParser(profile=profile, **kwargs)
    config_instance.read_dict({DEFAULT_PROFILE: DEFAULTS})
    config_instance.read_dict(BUILTIN_PROFILES)

    if config_file_path is not None:
        with codecs.open(config_file_path, 'r', encoding='utf-8') as f:
            config_instance.read_file(f)

    if not config_instance.has_profile(profile):
        raise ConfigurationError('Unknown profile: {}'.format(profile))
    return config_instance


def settings_from_config(config):
    try:
        return Settings(
            tol=config.getfloat('tol'),
            k_max=config.getint('k_max'),
            d_cap=config.getfloat('d_cap'),
            seed=config.getint('seed'),
            samples=config.getint('samples'),
            radius=config.getfloat('radius'),
            probe_scale=config.getfloat('probe_scale'),
            trials=config.getint('trials'),
            exhaustive_max_dim=config.getint('exhaustive_max_dim'),
        )
    except ValueError as e:
        raise ConfigurationError('Invalid setting in profile {}: {}'.format(config.profile, e))
