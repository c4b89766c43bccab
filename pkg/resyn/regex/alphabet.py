import string

# Printable ASCII (32-126) plus tab, newline, carriage return and form feed.
# Vertical tab is not a member, so \s never matches it.
PRINTABLE = frozenset(chr(code) for code in range(32, 127))
SIGMA = PRINTABLE | frozenset("\t\n\r\f")

DIGITS = frozenset(string.digits)
LOWER = frozenset(string.ascii_lowercase)
UPPER = frozenset(string.ascii_uppercase)
LETTERS = LOWER | UPPER
HEX = DIGITS | frozenset("abcdefABCDEF")
WORD = LETTERS | DIGITS | frozenset("_")
SPACE = frozenset(" \t\n\r\f")

# Named classes in the order the serializer tries them.
NAMED_CLASSES: dict[str, frozenset[str]] = {
    "\\d": DIGITS,
    "\\w": WORD,
    "\\s": SPACE,
    "\\D": SIGMA - DIGITS,
    "\\W": SIGMA - WORD,
    "\\S": SIGMA - SPACE,
    ".": SIGMA,
}

# Anonymization token codes: [3, 8], [14, 31] and 127.
TOKEN_CODES = tuple(range(3, 9)) + tuple(range(14, 32)) + (127,)
TOKEN_CHARS = frozenset(chr(code) for code in TOKEN_CODES)

CONTROL_ESCAPES = {"\t": "\\t", "\n": "\\n", "\r": "\\r", "\f": "\\f"}


def in_sigma(text: str) -> bool:
    """
    Checks that every character of a string belongs to the alphabet.

    :param text: the string to check
    :return: True if every character is in SIGMA
    """
    return all(char in SIGMA for char in text)


def is_token(char: str) -> bool:
    """
    Checks whether a character is an anonymization token.

    :param char: a single character
    :return: True if the character's code is one of TOKEN_CODES
    """
    return char in TOKEN_CHARS
