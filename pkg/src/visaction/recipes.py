"""Structural recipes for involutive automorphisms of matrix algebras.

A recipe acts by X -> sign * A * phi(X) * A^{-1} where phi optionally
applies entrywise conjugation and/or the negative transpose X -> -X^T.
Those four phi choices exponentiate to group maps, so the same recipe
drives both the exact algebra computations and the floating-point
certifier.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .exact import ExactMatrix


@dataclass(frozen=True)
class InvolutionRecipe:
    conjugator: ExactMatrix
    conj: bool = False
    neg_transpose: bool = False
    sign: int = 1
    _inverse: ExactMatrix = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "_inverse", self.conjugator.inverse())

    # -- algebra action ------------------------------------------------
    def apply(self, M: ExactMatrix) -> ExactMatrix:
        X = M
        if self.neg_transpose:
            X = -X.transpose()
        if self.conj:
            X = X.conj()
        out = self.conjugator * X * self._inverse
        return -out if self.sign == -1 else out

    # -- composition self after other -----------------------------------
    def compose(self, other: "InvolutionRecipe") -> "InvolutionRecipe":
        B = other.conjugator
        if self.neg_transpose:
            B = B.transpose().inverse()
        if self.conj:
            B = B.conj()
        return InvolutionRecipe(
            conjugator=self.conjugator * B,
            conj=self.conj != other.conj,
            neg_transpose=self.neg_transpose != other.neg_transpose,
            sign=self.sign * other.sign,
        )

    def conjugate_by(self, M: ExactMatrix) -> "InvolutionRecipe":
        """The recipe for Ad(M) o self o Ad(M)^{-1}."""
        B = M
        if self.neg_transpose:
            B = M.transpose().inverse()
        if self.conj:
            B = B.conj()
        return InvolutionRecipe(
            conjugator=M * self.conjugator * B.inverse(),
            conj=self.conj,
            neg_transpose=self.neg_transpose,
            sign=self.sign,
        )

    # -- group action (floating point) ----------------------------------
    def group_maps_exist(self) -> bool:
        return self.sign == 1

    def group_apply(self, gmat):
        """Apply the exponentiated map to a complex numpy group element."""
        import numpy as np

        if not self.group_maps_exist():
            raise ValueError("recipe with sign -1 has no group version")
        A = self.conjugator_complex()
        Ainv = self.inverse_complex()
        X = np.asarray(gmat)
        if self.neg_transpose:
            X = np.linalg.inv(X).T
        if self.conj:
            X = X.conj()
        return A @ X @ Ainv

    def conjugator_complex(self):
        import numpy as np

        m = self.conjugator
        return np.array([[complex(m[i, j].re, m[i, j].im)
                          for j in range(m.cols)] for i in range(m.rows)])

    def inverse_complex(self):
        import numpy as np

        m = self._inverse
        return np.array([[complex(m[i, j].re, m[i, j].im)
                          for j in range(m.cols)] for i in range(m.rows)])

    def describe(self) -> str:
        parts = []
        if self.sign == -1:
            parts.append("-")
        parts.append("Ad")
        if self.conj:
            parts.append("·conj")
        if self.neg_transpose:
            parts.append("·(-T)")
        return "".join(parts)


def ad_recipe(A: ExactMatrix) -> InvolutionRecipe:
    return InvolutionRecipe(conjugator=A)

def conj_recipe(A: ExactMatrix | None = None, size: int | None = None) -> InvolutionRecipe:
    if A is None:
        A = ExactMatrix.identity(size)
    return InvolutionRecipe(conjugator=A, conj=True)

def neg_transpose_recipe(A: ExactMatrix | None = None,
                         size: int | None = None) -> InvolutionRecipe:
    if A is None:
        A = ExactMatrix.identity(size)
    return InvolutionRecipe(conjugator=A, neg_transpose=True)
