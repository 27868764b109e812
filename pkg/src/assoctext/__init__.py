"""Chain-association substitution graphs, swarm-search adversarial attacks,
and graph-based recovery defenses for Chinese text classifiers."""

__version__ = "0.1.0"

from .lexicon import ResourceBundle, Token, load_resources, segment  # noqa: F401
from .graph import AssocGraph, ExpansionConfig, expand_word, merge  # noqa: F401
