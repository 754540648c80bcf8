"""
Package and report format versions for cliquebound.
"""

# Package version; releaselevel is one of alpha, beta, rc or final
__version_info__ = {
    "major": 0,
    "minor": 3,
    "micro": 0,
    "releaselevel": "beta",
    "serial": 1,
}

# Bumped whenever a record or summary field is renamed or removed
SCHEMA_VERSION = 1

RELEASE_TAGS = {"alpha": "a", "beta": "b", "rc": "rc"}


def get_version(short: bool = False) -> str:
    """
    Returns the PEP 440 version string, e.g. 0.3.0b1, or 0.3.0 when short.
    """
    level = __version_info__["releaselevel"]
    if level != "final" and level not in RELEASE_TAGS:
        raise ValueError(f"unknown release level {level!r}")

    version = "{major}.{minor}.{micro}".format(**__version_info__)
    if short or level == "final":
        return version
    return f"{version}{RELEASE_TAGS[level]}{__version_info__['serial']}"
