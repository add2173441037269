"""Lexicon contrast-dispersion toolkit.

Syllabifies a transcribed word list, extracts segment sequences, finds
minimal sequence pairs and computes feature-by-context contrast matrices,
with CSV/JSON/Markdown/SVG reporting and a CLI (`ptrac`).
"""

__version__ = "0.1.0"

from .errors import (  # noqa: F401
    InventoryError,
    LexiconError,
    PtracError,
    StudyError,
    SyllabifyError,
    TokenizeError,
)
from .inventory import (  # noqa: F401
    FEATURES,
    Inventory,
    Phoneme,
    contrasting_feature,
    featural_pairs,
    parse_inventory,
)
from .lexicon import (  # noqa: F401
    LexEntry,
    Lexicon,
    parse_lexicon,
    serialize_lexicon,
    tokenize_transcription,
)
from .syllabifier import Syllable, format_syllables, syllabify  # noqa: F401
from .core import (  # noqa: F401
    ContrastMatrix,
    MinimalSequencePair,
    SequenceTable,
    StudyConfig,
    StudyReport,
    aggregate,
    count_contrasts,
    enumerate_minimal_sequence_pairs,
    extract_sequences,
    list_pairs_for,
    run_study,
)
