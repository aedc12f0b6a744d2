from __future__ import annotations

import pytest

from dihedral_cm import spectrum


@pytest.fixture(autouse=True)
def _no_disk_cache():
    # tests never touch the user's cache directory, and CLI runs do not leak a store
    if spectrum._STORE is not None:
        spectrum.set_generator_store(None)
    yield
    if spectrum._STORE is not None:
        spectrum.set_generator_store(None)
