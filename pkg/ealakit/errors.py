"""Exception hierarchy shared by every ealakit module"""

from typing import Any, Optional


class EalaKitError(Exception):
    """Base error. `witness` is a JSON-serialisable description of the offending data"""

    def __init__(self, message: str, witness: Optional[Any] = None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def to_dict(self) -> dict:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "witness": self.witness,
        }


# exactnum
class DivisionByZero(EalaKitError, ZeroDivisionError):
    pass


class NonCommuting(EalaKitError):
    pass


class WrongOrder(EalaKitError):
    pass


# rootsys
class InvalidType(EalaKitError):
    pass


class OrderMismatch(EalaKitError):
    pass


class NotAutomorphism(EalaKitError):
    pass


# glie
class ForeignElement(EalaKitError):
    pass


# multiloop
class CartanNotPreserved(EalaKitError):
    pass


class NotRootSystem(EalaKitError):
    pass


# dercoc
class NotSkew(EalaKitError):
    pass


class NotCentroidal(EalaKitError):
    pass


class ClosureUnbounded(EalaKitError):
    pass


class EvNotInjective(EalaKitError):
    pass


class InvalidCocycle(EalaKitError):
    pass


# eala
class NotToral(EalaKitError):
    pass


class FormDegenerateOnH(EalaKitError):
    pass


# autmorph
class NotNilpotent(EalaKitError):
    pass


class NotDerivation(EalaKitError):
    pass


class NotCommutingWithD(EalaKitError):
    pass


class NotAutomorphismOfL(EalaKitError):
    pass


class CoreCartanMismatch(EalaKitError):
    pass


class NotAGraph(EalaKitError):
    pass


class InconsistentWeightEquation(EalaKitError):
    pass


# cli
class ManifestError(EalaKitError):
    """Schema or cross-reference failure; witness holds JSON-pointer locations"""
