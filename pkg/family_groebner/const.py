"""Constants for family_groebner."""

from __future__ import annotations

DOMAIN = "family_groebner"
VERSION = "0.1.0"

ENV_DEFAULT_PRIME = "FAMILY_GROEBNER_PRIME"

# Primitive monomial orders
ORDER_LEX = "lex"
ORDER_GRLEX = "grlex"
ORDER_GREVLEX = "grevlex"
PRIMITIVE_ORDERS = (ORDER_LEX, ORDER_GRLEX, ORDER_GREVLEX)
ORDER_ALIASES = {
    "deglex": ORDER_GRLEX,
    "degrevlex": ORDER_GREVLEX,
    "dp": ORDER_GREVLEX,
    "lp": ORDER_LEX,
}

# Coefficient domains
FIELD_RATIONAL = "Q"
FIELD_PRIME = "Fp"
RING_INTEGER = "Z"
RING_INTEGER_MOD = "Zmod"

# Auxiliary variable names for the elimination tricks
AUX_INTERSECT = "_t"
AUX_SATURATE = "_w"

# Configuration Properties
CONF_COMMAND = "command"
CONF_FILE = "file"
CONF_IDEAL = "ideal"
CONF_POINT = "point"
CONF_PRIME = "prime"
CONF_WINDOW = "window"
CONF_FORMAT = "format"
CONF_ELEMENT = "element"
CONF_MODULUS = "modulus"
CONF_Q = "q"
CONF_VERBOSE = "verbose"

# Report keys
ATTR_COMMAND = "command"
ATTR_IDEAL = "ideal"
ATTR_BASIS = "basis"
ATTR_ORDER = "order"
ATTR_RING = "ring"
ATTR_BASE = "base"
ATTR_ENTRIES = "entries"
ATTR_EXPONENT = "exponent"
ATTR_GENERATORS = "generators"
ATTR_WITNESS = "witness"
ATTR_NOTES = "notes"
ATTR_VERDICT = "verdict"
ATTR_GOOD = "good"
ATTR_EQUAL = "equal"
ATTR_CONTAINED = "contained"
ATTR_PREDICTED = "predicted"
ATTR_ACTUAL = "actual"
ATTR_POINT = "point"
ATTR_PRIME = "prime"
ATTR_LOCUS = "locus"
ATTR_COMBINED = "combined"
ATTR_PER_VARIABLE = "per_variable"
ATTR_CERTIFICATE = "certificate"
ATTR_MONOMIALS = "monomials"

# Output formats
FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMATS = (FORMAT_TEXT, FORMAT_JSON)

# Commands
COMMAND_GB = "gb"
COMMAND_INITIAL = "initial"
COMMAND_COEFFS = "coeffs"
COMMAND_CONTRACT = "contract"
COMMAND_FLAT_LOCUS = "flat-locus"
COMMAND_GOOD_POINT = "good-point"
COMMAND_SPECIALIZE = "specialize"
COMMAND_ISO_LOCUS = "iso-locus"
COMMAND_FINITE_LOCUS = "finite-locus"
COMMAND_SATURATE = "saturate"
COMMAND_QUOLEM_CHECK = "quolem-check"
COMMAND_MODULE_GENS = "module-gens"
COMMAND_MONO_COEFFS = "mono-coeffs"
COMMAND_MONO_FIBER = "mono-fiber"
COMMAND_MONO_DIAGRAM = "mono-diagram"

COMMANDS = (
    COMMAND_GB,
    COMMAND_INITIAL,
    COMMAND_COEFFS,
    COMMAND_CONTRACT,
    COMMAND_FLAT_LOCUS,
    COMMAND_GOOD_POINT,
    COMMAND_SPECIALIZE,
    COMMAND_ISO_LOCUS,
    COMMAND_FINITE_LOCUS,
    COMMAND_SATURATE,
    COMMAND_QUOLEM_CHECK,
    COMMAND_MODULE_GENS,
    COMMAND_MONO_COEFFS,
    COMMAND_MONO_FIBER,
    COMMAND_MONO_DIAGRAM,
)

# Exit statuses
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE_ERROR = 3
EXIT_PRECONDITION = 4

# Defaults
DEFAULT_PRIME = 32003
DEFAULT_ORDER = ORDER_LEX
DEFAULT_FORMAT = FORMAT_TEXT
DEFAULT_WINDOW = 4
DEFAULT_IDEAL = "I"

# Exponent components are kept within a machine word
MAX_EXPONENT = 2**31 - 1
