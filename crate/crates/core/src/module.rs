use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::ring::{Ring, RingElement};

/// A finitely generated module given by its cyclic decomposition
/// `R/<c_1> + R/<c_2> + ...` with `c_1 | c_2 | ...`; a `0` factor is a free
/// summand. Unit factors are dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleInvariants {
    pub ring: Ring,
    pub cyclic_factors: Vec<RingElement>,
}

impl ModuleInvariants {
    pub fn zero(ring: Ring) -> Self {
        ModuleInvariants {
            ring,
            cyclic_factors: Vec::new(),
        }
    }

    /// From the diagonal of a Smith form plus a number of free summands.
    pub fn from_smith_diagonal<'a>(
        ring: Ring,
        diagonal: impl IntoIterator<Item = &'a RingElement>,
        free_rank: usize,
    ) -> Self {
        let mut cyclic_factors: Vec<RingElement> = diagonal
            .into_iter()
            .filter(|d| !d.is_unit())
            .map(RingElement::canonical)
            .collect();
        cyclic_factors.extend(std::iter::repeat_n(ring.zero(), free_rank));
        ModuleInvariants {
            ring,
            cyclic_factors,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cyclic_factors.is_empty()
    }

    pub fn free_rank(&self) -> usize {
        self.cyclic_factors.iter().filter(|c| c.is_zero()).count()
    }

    /// `c * M = 0`.
    pub fn annihilated_by(&self, c: &RingElement) -> Result<bool> {
        for f in &self.cyclic_factors {
            if !f.divides(c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The product of the cyclic factors (the order ideal), or `None` if the
    /// module has a free summand.
    pub fn order(&self) -> Option<RingElement> {
        if self.free_rank() > 0 {
            return None;
        }
        Some(
            self.cyclic_factors
                .iter()
                .fold(self.ring.one(), |acc, c| &acc * c),
        )
    }
}

impl fmt::Display for ModuleInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, c) in self.cyclic_factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_zero() {
                f.write_str("R")?;
            } else {
                write!(f, "R/<{c}>")?;
            }
        }
        Ok(())
    }
}
