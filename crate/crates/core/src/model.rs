//! A tagged union over the four algebra kinds, used by the enumerator, the
//! text format, and the CLI.

use crate::effect::EffectAlgebra;
use crate::pseudoeffect::PseudoeffectAlgebra;
use crate::quasires::{CommQResLattice, QResLattice};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Algebra {
    Effect(EffectAlgebra),
    Pseudo(PseudoeffectAlgebra),
    Cqrl(CommQResLattice),
    Qrl(QResLattice),
}

impl Algebra {
    pub fn kind_token(&self) -> &'static str {
        match self {
            Algebra::Effect(_) => "effect",
            Algebra::Pseudo(_) => "pseudoeffect",
            Algebra::Cqrl(_) => "cqrl",
            Algebra::Qrl(_) => "qrl",
        }
    }

    pub fn carrier(&self) -> &crate::finite::Carrier {
        match self {
            Algebra::Effect(e) => &e.carrier,
            Algebra::Pseudo(p) => &p.carrier,
            Algebra::Cqrl(c) => &c.carrier,
            Algebra::Qrl(q) => &q.carrier,
        }
    }

    pub fn size(&self) -> usize {
        self.carrier().size()
    }
}
