use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorKind {
    /// `T^n ∘ ab`
    Tensor,
    /// `Λ^n ∘ ab`
    Exterior,
    /// `Γ^n ∘ ab`
    Divided,
    /// `S^n ∘ ab`
    Symmetric,
    /// Passi functor `Pa_n`
    Passi,
}

/// Symbolic name of a polynomial functor on free groups. `ab` is `T^1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FunctorDescriptor {
    kind: FunctorKind,
    arity: usize,
}

impl FunctorDescriptor {
    pub fn new(kind: FunctorKind, arity: usize) -> Result<Self> {
        if kind == FunctorKind::Passi && arity == 0 {
            return Err(Error::InvalidParameter("Passi functors have arity at least 1".into()));
        }
        Ok(FunctorDescriptor { kind, arity })
    }

    pub fn ab() -> Self {
        Self::tensor(1)
    }

    pub fn tensor(n: usize) -> Self {
        FunctorDescriptor {
            kind: FunctorKind::Tensor,
            arity: n,
        }
    }

    pub fn exterior(n: usize) -> Self {
        FunctorDescriptor {
            kind: FunctorKind::Exterior,
            arity: n,
        }
    }

    pub fn divided(n: usize) -> Self {
        FunctorDescriptor {
            kind: FunctorKind::Divided,
            arity: n,
        }
    }

    pub fn symmetric(n: usize) -> Self {
        FunctorDescriptor {
            kind: FunctorKind::Symmetric,
            arity: n,
        }
    }

    /// # Panics
    /// If `n == 0`.
    pub fn passi(n: usize) -> Self {
        assert!(n >= 1, "Passi functors have arity at least 1");
        FunctorDescriptor {
            kind: FunctorKind::Passi,
            arity: n,
        }
    }

    pub fn kind(&self) -> FunctorKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `T^n`, `Λ^n`, `Γ^n`, `S^n` agree for `n ≤ 1`; those are folded into
    /// `T^n`. `Pa_1` is isomorphic to `ab` as well but keeps its own models.
    pub(crate) fn canonical(&self) -> Self {
        if self.arity <= 1 && self.kind != FunctorKind::Passi {
            Self::tensor(self.arity)
        } else {
            *self
        }
    }
}

impl fmt::Display for FunctorDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.arity;
        match self.kind {
            FunctorKind::Tensor if n == 1 => write!(f, "ab"),
            FunctorKind::Tensor => write!(f, "T^{n}"),
            FunctorKind::Exterior => write!(f, "Lambda^{n}"),
            FunctorKind::Divided => write!(f, "Gamma^{n}"),
            FunctorKind::Symmetric => write!(f, "S^{n}"),
            FunctorKind::Passi => write!(f, "Pa^{n}"),
        }
    }
}
