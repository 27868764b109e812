"""Paths to the bundled lexicon tables and the toy review dataset."""
from pathlib import Path

_HERE = Path(__file__).resolve().parent


def bundle_dir() -> Path:
    """Directory holding the default resource bundle TSVs."""
    return _HERE / "bundle"


def toy_train_path() -> Path:
    return _HERE / "toy" / "train.tsv"


def toy_test_path() -> Path:
    return _HERE / "toy" / "test.tsv"
