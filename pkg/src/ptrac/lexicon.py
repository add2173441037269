"""Word-list ingestion.

The lexicon file is plain UTF-8 TSV: one word type per line,
``orthography<TAB>transcription`` with an optional third column that is
accepted and ignored. ``#`` starts a comment line; blank lines are skipped.
Counts downstream are type frequencies, so no numeric column is read.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LexiconError, TokenizeError
from .inventory import Inventory, normalize_symbol


@dataclass(frozen=True)
class LexEntry:
    orthography: str
    transcription: tuple  # tuple of phoneme symbols


@dataclass(frozen=True)
class Diagnostic:
    line: int
    reason: str

    def __str__(self):
        return "line %d: %s" % (self.line, self.reason)


class Lexicon:
    def __init__(self, entries, inventory: Inventory):
        self.entries = list(entries)
        self.inventory = inventory

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def tokenize_transcription(text: str, inv: Inventory):
    """Greedy longest-match segmentation of `text` into inventory symbols.

    With one-character symbols this is a per-character mapping; multi-char
    symbols are matched longest-first. "?" normalizes to the glottal stop.
    """
    if not text:
        raise TokenizeError("empty transcription", offset=0, fragment="")
    symbols = sorted(inv.phonemes, key=len, reverse=True)
    out = []
    i = 0
    while i < len(text):
        for sym in symbols:
            cand = normalize_symbol(text[i:i + len(sym)])
            if cand == sym:
                out.append(sym)
                i += len(sym)
                break
        else:
            frag = text[i]
            raise TokenizeError(
                "no inventory symbol matches %r at offset %d" % (frag, i),
                offset=i,
                fragment=frag,
            )
    return tuple(out)


def parse_lexicon(text: str, inv: Inventory, strict: bool = False):
    """Parse a lexicon file; returns (Lexicon, diagnostics).

    Malformed lines become diagnostics and are skipped. In strict mode the
    first diagnostic is promoted to a fatal LexiconError.
    """
    entries = []
    diagnostics = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2 or not parts[0] or not parts[1]:
            diagnostics.append(Diagnostic(no, "expected 'orthography<TAB>transcription'"))
            continue
        try:
            trans = tokenize_transcription(parts[1], inv)
        except TokenizeError as exc:
            diagnostics.append(Diagnostic(no, str(exc)))
            continue
        entries.append(LexEntry(parts[0], trans))
    if strict and diagnostics:
        raise LexiconError(
            "%d malformed line(s): %s" % (len(diagnostics), "; ".join(map(str, diagnostics)))
        )
    return Lexicon(entries, inv), diagnostics


def serialize_lexicon(lex: Lexicon) -> str:
    """Inverse of parse_lexicon for well-formed lexicons (round-trips)."""
    return "".join(
        "%s\t%s\n" % (e.orthography, "".join(e.transcription)) for e in lex.entries
    )
