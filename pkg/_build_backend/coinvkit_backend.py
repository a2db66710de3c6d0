"""PEP 517 build backend for CoinvKit.

setup.py in this repository is a venv bootstrap script, not a setuptools
configuration, so this backend wraps setuptools.build_meta and builds from
pyproject.toml alone instead of executing setup.py.
"""

from setuptools import build_meta as _build_meta


class _Backend(_build_meta._BuildMetaBackend):
    def run_setup(self, setup_script='setup.py'):
        # A missing script path makes setuptools fall back to a bare setup().
        super().run_setup(setup_script='_no_setup_script_.py')


_BACKEND = _Backend()

get_requires_for_build_wheel = _BACKEND.get_requires_for_build_wheel
get_requires_for_build_sdist = _BACKEND.get_requires_for_build_sdist
prepare_metadata_for_build_wheel = _BACKEND.prepare_metadata_for_build_wheel
build_wheel = _BACKEND.build_wheel
build_sdist = _BACKEND.build_sdist
get_requires_for_build_editable = _BACKEND.get_requires_for_build_editable
prepare_metadata_for_build_editable = _BACKEND.prepare_metadata_for_build_editable
build_editable = _BACKEND.build_editable
