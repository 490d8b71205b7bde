//! Isomorphism-invariant fingerprints used to compare subgroups with the
//! expected structures without an isomorphism test.

use std::fmt;

use crate::error::Result;
use crate::group::PermGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub order: u64,
    pub derived_order: u64,
    pub abelianization_order: u64,
    pub exponent: u64,
    pub nilpotent: bool,
    pub solvable: bool,
}

impl Fingerprint {
    pub fn of(g: &PermGroup) -> Result<Fingerprint> {
        let order = g.order();
        let derived_order = g.derived_subgroup().order();
        Ok(Fingerprint {
            order,
            derived_order,
            abelianization_order: order / derived_order,
            exponent: g.exponent()?,
            nilpotent: g.is_nilpotent(),
            solvable: g.is_solvable(),
        })
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "order {}, derived {}, abelianization {}, exponent {}",
            self.order, self.derived_order, self.abelianization_order, self.exponent
        )?;
        if self.nilpotent {
            f.write_str(", nilpotent")
        } else if self.solvable {
            f.write_str(", solvable")
        } else {
            f.write_str(", nonsolvable")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas::{alternating, cyclic, dihedral, symmetric};

    #[test]
    fn order_twelve_types_differ() {
        let a4 = Fingerprint::of(&alternating(4)).unwrap();
        let d12 = Fingerprint::of(&dihedral(12)).unwrap();
        let c12 = Fingerprint::of(&cyclic(12)).unwrap();
        assert_eq!(a4.derived_order, 4);
        assert_eq!(a4.abelianization_order, 3);
        assert_ne!(a4, d12);
        assert_ne!(d12, c12);
        assert_ne!(a4, c12);
        assert!(c12.nilpotent);
    }

    #[test]
    fn symmetric_four() {
        let f = Fingerprint::of(&symmetric(4)).unwrap();
        assert_eq!(
            (f.order, f.derived_order, f.exponent, f.solvable, f.nilpotent),
            (24, 12, 12, true, false)
        );
    }
}
