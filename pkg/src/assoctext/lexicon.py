"""Linguistic resource tables and the word-association primitives.

A :class:`ResourceBundle` is loaded once from a directory of TSV files and
is immutable afterwards; every query here is a pure read, so a bundle can
be shared freely across threads.

All pinyin is toneless. Ranked outputs are deterministic: frequency
descending, then Unicode codepoint ascending.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional

import numpy as np

from .errors import CoverageError, ResourceFormatError, ResourceMissingError

PINYIN_DELIM = " "

KINDS = ("hanzi_word", "pinyin_seq", "latin_word", "acronym", "component_seq")


def is_cjk_char(ch: str) -> bool:
    cp = ord(ch)
    return 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF


def is_cjk_word(s: str) -> bool:
    return bool(s) and all(is_cjk_char(c) for c in s)


@dataclass(frozen=True)
class Token:
    """A sentence unit: surface string plus a script/provenance kind.

    ``hanzi_word`` and ``component_seq`` are fully CJK (the latter marks a
    word containing raw disassembly components), ``pinyin_seq`` is
    space-delimited lowercase syllables, ``acronym`` is bare lowercase
    letters, and ``latin_word`` is the non-CJK catchall (covers English
    words, phrases, digits and punctuation).
    """

    surface: str
    kind: str

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown token kind {self.kind!r}")
        if not self.surface:
            raise ValueError("empty token surface")
        if self.kind in ("hanzi_word", "component_seq"):
            if not is_cjk_word(self.surface):
                raise ValueError(f"{self.kind} token with non-CJK surface {self.surface!r}")
        elif self.kind == "pinyin_seq":
            if not all(p.isascii() and p.isalpha() and p.islower()
                       for p in self.surface.split(PINYIN_DELIM)):
                raise ValueError(f"bad pinyin_seq surface {self.surface!r}")
        elif self.kind == "acronym":
            if not (self.surface.isascii() and self.surface.isalpha()
                    and self.surface.islower()):
                raise ValueError(f"bad acronym surface {self.surface!r}")
        else:  # latin_word
            if any(is_cjk_char(c) for c in self.surface):
                raise ValueError(f"latin_word token with CJK surface {self.surface!r}")

    @staticmethod
    def hanzi(surface: str) -> "Token":
        return Token(surface, "hanzi_word")

    @staticmethod
    def infer(surface: str) -> "Token":
        """Classify a raw string: CJK-only becomes hanzi_word, else latin_word."""
        return Token(surface, "hanzi_word" if is_cjk_word(surface) else "latin_word")


@dataclass(frozen=True)
class ResourceBundle:
    """All lexicon tables plus indexes derived from them at load time."""

    pinyin_table: Mapping[str, tuple]        # char -> toneless syllables, rank-1 first
    disassembly_table: Mapping[str, str]     # char -> component string (>= 2 chars)
    translation_dict: Mapping[str, tuple]    # hanzi word -> English words
    phoneme_lexicon: Mapping[str, tuple]     # English word -> phoneme units
    phoneme_map: Mapping[str, tuple]         # phoneme unit -> pinyin syllables
    visual_table: Mapping[str, tuple]        # char -> ((char, score), ...) desc
    vocabulary: Mapping[str, int]            # word -> frequency
    embeddings: Mapping[str, np.ndarray]     # token -> unit-norm vector
    embedding_dim: int
    # derived
    hanzify_index: Mapping[str, tuple] = field(default_factory=dict)  # syll -> ((char, freq), ...)
    syllable_freq: Mapping[str, int] = field(default_factory=dict)
    reassembly_table: Mapping[str, str] = field(default_factory=dict)  # components -> char
    max_word_len: int = 1


_FILES = {
    "pinyin": "pinyin.tsv",
    "disassembly": "disassembly.tsv",
    "translations": "translations.tsv",
    "phonemes": "phonemes.tsv",
    "phoneme_map": "phoneme_map.tsv",
    "visual": "visual.tsv",
    "vocab": "vocab.tsv",
    "embeddings": "embeddings.tsv",
}


def _read_rows(path: Path, n_cols: int):
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if not line:
                continue
            cols = line.split("\t")
            if len(cols) != n_cols:
                raise ResourceFormatError(
                    f"expected {n_cols} tab-separated columns, got {len(cols)}",
                    path=path, line=lineno)
            rows.append((lineno, cols))
    return rows


def load_resources(directory) -> ResourceBundle:
    """Load and validate a resource bundle from a directory of TSV files."""
    directory = Path(directory)
    paths = {}
    for key, name in _FILES.items():
        p = directory / name
        if not p.is_file():
            raise ResourceMissingError(key, p)
        paths[key] = p

    pinyin = {}
    for lineno, (ch, sylls) in _read_rows(paths["pinyin"], 2):
        parts = tuple(s for s in sylls.split(",") if s)
        if len(ch) != 1 or not parts:
            raise ResourceFormatError("pinyin row needs one char and >=1 syllable",
                                      path=paths["pinyin"], line=lineno)
        pinyin[ch] = parts

    disassembly = {}
    for lineno, (ch, comp) in _read_rows(paths["disassembly"], 2):
        if len(ch) != 1 or len(comp) < 2:
            raise ResourceFormatError("disassembly row needs one char and >=2 components",
                                      path=paths["disassembly"], line=lineno)
        disassembly[ch] = comp
    reassembly = {}
    for ch, comp in disassembly.items():
        if comp in reassembly:
            raise ResourceFormatError(
                f"ambiguous disassembly: {comp!r} maps back to both "
                f"{reassembly[comp]!r} and {ch!r}", path=paths["disassembly"])
        reassembly[comp] = ch

    translations = {}
    for lineno, (word, ens) in _read_rows(paths["translations"], 2):
        translations[word] = tuple(e for e in ens.split("|") if e)

    phonemes = {}
    for lineno, (word, units) in _read_rows(paths["phonemes"], 2):
        phonemes[word] = tuple(units.split())

    phoneme_map = {}
    for lineno, (unit, sylls) in _read_rows(paths["phoneme_map"], 2):
        phoneme_map[unit] = tuple(s for s in sylls.split(",") if s)

    visual = {}
    for lineno, (ch, entries) in _read_rows(paths["visual"], 2):
        nbrs = []
        for entry in entries.split(","):
            try:
                nb, score = entry.rsplit(":", 1)
                score = float(score)
            except ValueError:
                raise ResourceFormatError(f"bad visual entry {entry!r}",
                                          path=paths["visual"], line=lineno) from None
            if not 0.0 <= score <= 1.0:
                raise ResourceFormatError(f"visual score {score} outside [0,1]",
                                          path=paths["visual"], line=lineno)
            nbrs.append((nb, score))
        if any(nbrs[i][1] < nbrs[i + 1][1] for i in range(len(nbrs) - 1)):
            raise ResourceFormatError("visual scores must be sorted descending",
                                      path=paths["visual"], line=lineno)
        visual[ch] = tuple(nbrs)

    vocab = {}
    for lineno, (word, freq) in _read_rows(paths["vocab"], 2):
        try:
            vocab[word] = int(freq)
        except ValueError:
            raise ResourceFormatError(f"bad frequency {freq!r}",
                                      path=paths["vocab"], line=lineno) from None

    embeddings = {}
    dim = None
    for lineno, (tok, vec) in _read_rows(paths["embeddings"], 2):
        try:
            v = np.array([float(x) for x in vec.split()], dtype=np.float64)
        except ValueError:
            raise ResourceFormatError("non-numeric embedding component",
                                      path=paths["embeddings"], line=lineno) from None
        if dim is None:
            dim = v.size
        elif v.size != dim:
            raise ResourceFormatError(
                f"embedding dimension {v.size} != {dim}",
                path=paths["embeddings"], line=lineno)
        if abs(np.linalg.norm(v) - 1.0) > 1e-6:
            raise ResourceFormatError(f"embedding for {tok!r} is not unit norm",
                                      path=paths["embeddings"], line=lineno)
        embeddings[tok] = v
    if dim is None:
        raise ResourceFormatError("embeddings file is empty", path=paths["embeddings"])

    missing = {c for w in vocab for c in w if is_cjk_char(c)} - set(pinyin)
    if missing:
        raise ResourceFormatError(
            f"vocabulary characters missing from pinyin table: {sorted(missing)}",
            path=paths["vocab"])

    # hanzify index: per syllable, chars ranked by vocab frequency then codepoint.
    # Characters without a standalone vocab entry get frequency 1.
    by_syll: dict = {}
    for ch, sylls in pinyin.items():
        freq = max(vocab.get(ch, 1), 1)
        for s in sylls:
            by_syll.setdefault(s, []).append((ch, freq))
    hanzify_index = {
        s: tuple(sorted(chars, key=lambda cf: (-cf[1], cf[0])))
        for s, chars in by_syll.items()
    }
    syllable_freq = {s: sum(f for _, f in chars) for s, chars in hanzify_index.items()}

    return ResourceBundle(
        pinyin_table=pinyin,
        disassembly_table=disassembly,
        translation_dict=translations,
        phoneme_lexicon=phonemes,
        phoneme_map=phoneme_map,
        visual_table=visual,
        vocabulary=vocab,
        embeddings=embeddings,
        embedding_dim=dim,
        hanzify_index=hanzify_index,
        syllable_freq=syllable_freq,
        reassembly_table=reassembly,
        max_word_len=max((len(w) for w in vocab), default=1),
    )


# ---------------------------------------------------------------------------
# Segmentation
# ---------------------------------------------------------------------------

def segment(text: str, vocab: Mapping[str, int]) -> list[Token]:
    """Split a sentence into tokens.

    Text containing ASCII spaces is treated as pre-segmented and split on
    them. Otherwise forward maximum matching against the vocabulary is
    used and unmatched characters fall back to single-character tokens.
    Concatenating the output surfaces reproduces the input (modulo the
    pre-segmentation spaces).
    """
    if not text:
        raise ValueError("cannot segment empty text")
    if " " in text:
        return [Token.infer(piece) for piece in text.split(" ") if piece]
    max_len = max((len(w) for w in vocab), default=1)
    tokens = []
    i = 0
    while i < len(text):
        for length in range(min(max_len, len(text) - i), 1, -1):
            piece = text[i:i + length]
            if piece in vocab:
                tokens.append(Token.infer(piece))
                i += length
                break
        else:
            tokens.append(Token.infer(text[i]))
            i += 1
    return tokens


# ---------------------------------------------------------------------------
# Association-rule primitives
# ---------------------------------------------------------------------------

def _surface(word) -> str:
    return word.surface if isinstance(word, Token) else word


def pinyin_of(bundle: ResourceBundle, word) -> Token:
    """Toneless pinyin of a hanzi word, rank-1 reading per character."""
    s = _surface(word)
    if not s:
        raise ValueError("empty word")
    sylls = []
    for ch in s:
        if ch not in bundle.pinyin_table:
            raise CoverageError(f"character {ch!r} has no pinyin entry")
        sylls.append(bundle.pinyin_table[ch][0])
    return Token(PINYIN_DELIM.join(sylls), "pinyin_seq")


def _best_combinations(option_lists, limit, tie_key):
    """Best-first enumeration of per-position picks by total weight.

    ``option_lists`` holds per-position ``(item, weight)`` lists sorted by
    weight descending; combination score is the summed weight. Ties are
    broken by ``tie_key`` of the item tuple (codepoint ascending). Weights
    must be sorted descending per position for best-first to be exact.
    """
    if limit <= 0 or not option_lists:
        return []
    start = (0,) * len(option_lists)

    def entry(idx):
        items = tuple(option_lists[pos][j][0] for pos, j in enumerate(idx))
        score = sum(option_lists[pos][j][1] for pos, j in enumerate(idx))
        return (-score, tie_key(items), idx, items)

    heap = [entry(start)]
    seen = {start}
    out = []
    while heap and len(out) < limit:
        _, _, idx, items = heapq.heappop(heap)
        out.append(items)
        for pos in range(len(idx)):
            if idx[pos] + 1 < len(option_lists[pos]):
                nxt = idx[:pos] + (idx[pos] + 1,) + idx[pos + 1:]
                if nxt not in seen:
                    seen.add(nxt)
                    heapq.heappush(heap, entry(nxt))
    return out


def hanzify(bundle: ResourceBundle, pinyin_seq, k: int) -> list[Token]:
    """Top-k hanzi renderings of a pinyin sequence.

    Ranked by the product of per-syllable character frequencies (log-sum
    internally), ties by codepoint.
    """
    s = _surface(pinyin_seq)
    sylls = s.split(PINYIN_DELIM)
    option_lists = []
    for syll in sylls:
        if syll not in bundle.hanzify_index:
            raise CoverageError(f"unknown pinyin syllable {syll!r}")
        option_lists.append([(ch, math.log(freq) if freq > 1 else 0.0)
                             for ch, freq in bundle.hanzify_index[syll]])
    combos = _best_combinations(option_lists, k, tie_key=lambda items: "".join(items))
    return [Token("".join(items), "hanzi_word") for items in combos]


def translate(bundle: ResourceBundle, word) -> list[Token]:
    """Dictionary translations of a hanzi word; empty when absent."""
    return [Token(en, "latin_word")
            for en in bundle.translation_dict.get(_surface(word), ())]


_PER_PHONEME_SYLLABLES = 3


def transliterate(bundle: ResourceBundle, word, k: int) -> list[Token]:
    """Hanzi renderings of an English word via its phoneme-unit clusters.

    Each unit maps to up to three candidate syllables; the top-k syllable
    combinations (by per-unit rank) are rendered with each syllable's
    highest-frequency character.
    """
    s = _surface(word).lower()
    if s not in bundle.phoneme_lexicon:
        raise CoverageError(f"word {s!r} has no phoneme entry")
    option_lists = []
    for unit in bundle.phoneme_lexicon[s]:
        if unit not in bundle.phoneme_map:
            raise CoverageError(f"phoneme unit {unit!r} has no pinyin mapping")
        sylls = bundle.phoneme_map[unit][:_PER_PHONEME_SYLLABLES]
        option_lists.append([(syll, -rank) for rank, syll in enumerate(sylls)])
    combos = _best_combinations(option_lists, k,
                                tie_key=lambda items: PINYIN_DELIM.join(items))
    out = []
    for combo in combos:
        chars = []
        for syll in combo:
            if syll not in bundle.hanzify_index:
                raise CoverageError(f"unknown pinyin syllable {syll!r}")
            chars.append(bundle.hanzify_index[syll][0][0])
        tok = Token("".join(chars), "hanzi_word")
        if tok not in out:
            out.append(tok)
    return out


def acronym(seq) -> Token:
    """First letters of the units in a pinyin sequence or Latin phrase."""
    units = _surface(seq).split()
    if not units:
        raise ValueError("acronym needs at least one unit")
    return Token("".join(u[0].lower() for u in units), "acronym")


def fuzzy_expand(bundle: ResourceBundle, acr, limit: int) -> list[Token]:
    """Pinyin sequences whose syllable initials spell the acronym.

    Ranked by summed syllable frequency, ties by codepoint, truncated to
    ``limit``.
    """
    letters = _surface(acr)
    option_lists = []
    for letter in letters:
        matches = sorted(
            ((s, bundle.syllable_freq[s]) for s in bundle.hanzify_index
             if s.startswith(letter)),
            key=lambda sf: (-sf[1], sf[0]))
        if not matches:
            raise CoverageError(f"no pinyin syllable starts with {letter!r}")
        option_lists.append(matches)
    combos = _best_combinations(option_lists, limit,
                                tie_key=lambda items: PINYIN_DELIM.join(items))
    return [Token(PINYIN_DELIM.join(items), "pinyin_seq") for items in combos]


def disassemble(bundle: ResourceBundle, ch) -> Optional[Token]:
    """Left-right component split of a character, if the table has one."""
    comp = bundle.disassembly_table.get(_surface(ch))
    return Token(comp, "component_seq") if comp else None


def reassemble(bundle: ResourceBundle, comp) -> Optional[str]:
    """Inverse of :func:`disassemble`; None when the components are unknown."""
    return bundle.reassembly_table.get(_surface(comp))


def visual_neighbors(bundle: ResourceBundle, ch, k: int) -> list[tuple[str, float]]:
    """Top-k visually similar characters with scores, best first."""
    return list(bundle.visual_table.get(_surface(ch), ())[:k])


def render(tokens: Iterable[Token]) -> str:
    """Concatenate token surfaces into sentence text."""
    return "".join(t.surface for t in tokens)
