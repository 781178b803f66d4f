use std::collections::HashMap;
use std::sync::RwLock;

use crate::dual::{DualElement, DualMonomial};
use crate::lie::LieAlgebra;
use crate::pairing::Pairing;
use crate::scalar::Scalar;
use crate::smash::SmashElement;
use crate::uea::{PbwMonomial, Side, UeaPair};

/// `g # M = sum beta_L(a) (h_a # 1)` as pairs `(a, h_a)`.
pub(crate) type Decomposition = Vec<(PbwMonomial, DualElement)>;

/// Everything built from one Lie algebra: both enveloping algebras, the pairing, and
/// the caches used by the smash product and the structure maps.
#[derive(Debug)]
pub struct Context {
    pub(crate) lie: LieAlgebra,
    pub(crate) uea: UeaPair,
    pub(crate) pairing: Pairing,
    pub(crate) modular: Vec<Scalar>,
    pub(crate) deriv: RwLock<HashMap<(Side, usize, DualMonomial), DualElement>>,
    pub(crate) lambda: RwLock<HashMap<(Side, PbwMonomial), SmashElement>>,
    pub(crate) beta: RwLock<HashMap<PbwMonomial, SmashElement>>,
    pub(crate) decomp: RwLock<HashMap<(DualMonomial, PbwMonomial), Decomposition>>,
}

impl Context {
    pub fn new(lie: LieAlgebra) -> Self {
        let uea = UeaPair::new(&lie);
        let pairing = Pairing::new(&lie);
        let modular = lie.modular_vector();
        Context {
            lie,
            uea,
            pairing,
            modular,
            deriv: RwLock::default(),
            lambda: RwLock::default(),
            beta: RwLock::default(),
            decomp: RwLock::default(),
        }
    }

    pub fn lie(&self) -> &LieAlgebra {
        &self.lie
    }

    pub fn uea(&self) -> &UeaPair {
        &self.uea
    }

    pub fn pairing(&self) -> &Pairing {
        &self.pairing
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    /// `c_j = sum_i C^i_ij`.
    pub fn modular(&self) -> &[Scalar] {
        &self.modular
    }
}
