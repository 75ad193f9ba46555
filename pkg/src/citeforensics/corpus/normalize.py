"""Canonical form for raw reference strings."""

import unicodedata

# ASCII code points in a Unicode punctuation category (symbols such as $+<=>^`|~ are kept)
_ASCII_PUNCT = {
    i: None for i in range(128) if unicodedata.category(chr(i)).startswith("P")
}


def _strip_punctuation(text: str) -> str:
    return "".join(ch for ch in text if not unicodedata.category(ch).startswith("P"))


def normalize_reference(raw: str) -> str:
    """Fold a reference string so formatting noise does not count as edits.

    NFKC fold, lowercase, drop every Unicode punctuation character, then
    collapse whitespace runs to single spaces and trim.

    >>> normalize_reference("Smith,  J. (2020).  Title.")
    'smith j 2020 title'
    """
    if raw.isascii():
        return " ".join(raw.lower().translate(_ASCII_PUNCT).split())
    text = unicodedata.normalize("NFKC", raw).lower()
    text = _strip_punctuation(text)
    # removing punctuation can leave combining marks next to a base letter;
    # recompose so a second pass is a no-op
    text = unicodedata.normalize("NFKC", text)
    return " ".join(text.split())
