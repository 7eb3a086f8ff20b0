import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

from fusiontransfer.catalog import catalog_group  # noqa: E402
from fusiontransfer.fusion import fusion_system  # noqa: E402


@pytest.fixture(scope="session")
def s4_2():
    return fusion_system(catalog_group("symmetric:4"), 2)


@pytest.fixture(scope="session")
def s3_2():
    return fusion_system(catalog_group("symmetric:3"), 2)


@pytest.fixture(scope="session")
def a4_2():
    return fusion_system(catalog_group("alternating:4"), 2)


def subgroup_by_labels(G, *labels):
    from fusiontransfer.groups import generate_subgroup

    return generate_subgroup(G, [G.index(x) for x in labels])
