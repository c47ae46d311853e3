from __future__ import annotations

import pytest

from matroidcc import analyze, cli


@pytest.fixture(scope="session")
def catalog_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("catalog")
    rc = cli.main(["catalog", "--out", str(out)])
    assert rc == 0
    return out


@pytest.fixture(scope="session")
def catalog(catalog_dir):
    """The generated catalog, parsed once: list of (filename, matroid)."""
    entries = []
    for path in sorted(catalog_dir.glob("*.json")):
        entries.append((path.name, cli.parse_matroid(path)))
    return entries


@pytest.fixture(scope="session")
def conjecture_reports(catalog):
    """verify_conjecture over the whole catalog, computed once."""
    return {name: analyze.verify_conjecture(m) for name, m in catalog}
