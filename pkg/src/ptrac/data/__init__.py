"""Shipped data files: the Persian inventory and a small demo lexicon."""

from importlib import resources

from ..inventory import Inventory, parse_inventory


def _read(name: str) -> str:
    return (resources.files(__name__) / name).read_text(encoding="utf-8")


def persian_inventory_text() -> str:
    return _read("persian.inv")


def persian_inventory() -> Inventory:
    return parse_inventory(persian_inventory_text())


def voicing_fixture_text() -> str:
    """16-word demo lexicon whose coda clusters exercise voicing contrasts."""
    return _read("voicing_fixture.tsv")


def data_path(name: str):
    """Filesystem path of a shipped data file (for CLI examples/tests)."""
    return resources.files(__name__) / name
