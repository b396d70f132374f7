"""Exception types shared across the package.

Three failure flavours, distinguished so the command line tool can map
them to machine-readable reason codes:

* ``ArgumentError``  -- structurally bad arguments (mismatched ground
  sizes, labels outside the ground set, malformed profiles, ...).
* ``OrderError``     -- a pair of subsets that must be Gale-comparable
  is not.
* ``DomainError``    -- semantically invalid requests (deleting a
  coloop, decoding an asymmetric path word, triangulating a cell that
  is not toric, ...).
"""

from __future__ import annotations


class LpdmError(ValueError):
    """Base class for all domain-level errors raised by this package."""

    code = "error"


class ArgumentError(LpdmError):
    code = "argument"


class OrderError(LpdmError):
    code = "order"


class DomainError(LpdmError):
    code = "domain"


class UsageError(Exception):
    """Malformed input to the command line tool (bad JSON, bad schema).

    Deliberately not an ``LpdmError``: usage problems exit with a
    different status code than domain problems.
    """
