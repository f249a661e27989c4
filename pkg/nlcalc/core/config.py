#############################################################################
# Copyright 2025 National Technology & Engineering Solutions of Sandia, LLC
# (NTESS). Under the terms of Contract DE-NA0003525 with NTESS, the U.S.
# Government retains certain rights in this software.
#############################################################################

"""
Config:
    Run-time settings for NLCalc and the shared memoization registry.

    Settings are read from the `defaults` dictionary below and may be
    overridden by an optional `nlcalc/core/local_config.py` module of the
    format:

        config = {
            'threads': 4,
            'logLevel': 'INFO'
        }
"""

import functools
import logging

logger = logging.getLogger(__name__)

defaults = {
    'threads': 1,
    'logLevel': 'WARNING',
    'memoize': True,
    'randomSeed': 20210,
}


class ConfigException(KeyError):
    """Raised when a setting is unknown or a local override is malformed."""


try:
    from nlcalc.core.local_config import config as localConfig
except ModuleNotFoundError:
    localConfig = {}

for _key in localConfig:
    if _key not in defaults:
        raise ConfigException(
            "Unknown setting <{key}> in nlcalc.core.local_config. Known "
            "settings are: {known}.".format(key=_key,
                                            known=", ".join(sorted(defaults))))

_overrides = {}


def getSetting(name):
    """
    Returns the effective value of a setting.

    Parameters
    ----------
    name : str
        One of the keys of `defaults`.

    Raises
    ------
    ConfigException
        The setting does not exist.

    """
    if name not in defaults:
        raise ConfigException("Unknown setting <{name}>.".format(name=name))
    if name in _overrides:
        return _overrides[name]
    return localConfig.get(name, defaults[name])


def overrideSetting(name, value):
    """Overrides a setting for the remainder of the process (CLI flags)."""
    if name not in defaults:
        raise ConfigException("Unknown setting <{name}>.".format(name=name))
    _overrides[name] = value


def resetOverrides():
    _overrides.clear()


######
# Memoization registry
######
_cachedFunctions = []


def memoized(function):
    """
    Wraps `function` in an unbounded lru_cache and registers it so that
    clearCaches() can reach it. While the `memoize` setting is False calls
    go straight to `function`. Arguments must be hashable (canonical part
    tuples).
    """
    cached = functools.lru_cache(maxsize=None)(function)

    @functools.wraps(function)
    def wrapper(*args):
        if getSetting('memoize'):
            return cached(*args)
        return function(*args)

    wrapper.cache_clear = cached.cache_clear
    wrapper.cache_info = cached.cache_info
    _cachedFunctions.append(wrapper)
    return wrapper


def setMemoization(enabled):
    """Turns every registered cache on or off and empties them."""
    overrideSetting('memoize', bool(enabled))
    clearCaches()


def clearCaches():
    for cached in _cachedFunctions:
        cached.cache_clear()
    logger.debug("Cleared %d memoized functions.", len(_cachedFunctions))


def cacheStatistics():
    """Returns {qualified function name: CacheInfo} for every registered cache."""
    return {"{module}.{name}".format(module=cached.__module__,
                                     name=cached.__qualname__):
            cached.cache_info() for cached in _cachedFunctions}
