use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use crate::exec::Exec;
use crate::gt::{enumerate_patterns, GtPattern, HighestWeight, WeightVector};
use crate::linalg::{FactorialTable, GramForm, SparseMatrix};

use super::generators::Generators;

/// The irreducible `gl(n)` module `π_λ` in its Gelfand–Tsetlin basis.
///
/// Basis vectors are indexed by position in the canonical pattern order;
/// `gram` holds `‖ξ_Λ‖²` for each. Generator matrices are built on first use
/// and cached.
#[derive(Debug)]
pub struct Irrep {
    hw: HighestWeight,
    patterns: Vec<GtPattern>,
    gram: GramForm,
    index: HashMap<GtPattern, usize>,
    weights: Vec<WeightVector>,
    weight_spaces: BTreeMap<WeightVector, Vec<usize>>,
    generators: OnceLock<Generators>,
}

impl Irrep {
    pub fn new(hw: &HighestWeight) -> Self {
        Self::with_exec(hw, Exec::default())
    }

    pub fn with_exec(hw: &HighestWeight, exec: Exec) -> Self {
        let patterns = enumerate_patterns(hw);
        let table = FactorialTable::up_to(patterns[0].factorial_bound());
        let norms = exec.map(&patterns, |p| p.norm_sq_with(&table));
        let gram = GramForm::new(norms).expect("GT norms are positive");
        let index = patterns.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let weights: Vec<WeightVector> = patterns.iter().map(GtPattern::weight).collect();
        let mut weight_spaces: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for (i, w) in weights.iter().enumerate() {
            weight_spaces.entry(w.clone()).or_default().push(i);
        }
        Self {
            hw: hw.clone(),
            patterns,
            gram,
            index,
            weights,
            weight_spaces,
            generators: OnceLock::new(),
        }
    }

    pub fn hw(&self) -> &HighestWeight {
        &self.hw
    }

    pub fn n(&self) -> usize {
        self.hw.n()
    }

    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    pub fn patterns(&self) -> &[GtPattern] {
        &self.patterns
    }

    pub fn gram(&self) -> &GramForm {
        &self.gram
    }

    pub fn index_of(&self, p: &GtPattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn weight(&self, i: usize) -> &WeightVector {
        &self.weights[i]
    }

    /// Basis indices of each weight space, keyed by weight (ascending).
    pub fn weight_spaces(&self) -> &BTreeMap<WeightVector, Vec<usize>> {
        &self.weight_spaces
    }

    pub fn weight_space(&self, w: &WeightVector) -> &[usize] {
        self.weight_spaces.get(w).map_or(&[], Vec::as_slice)
    }

    pub fn generators(&self) -> &Generators {
        self.generators.get_or_init(|| Generators::build(self))
    }

    /// `E_{p,q}` (1-based), diagonal included.
    pub fn e(&self, p: usize, q: usize) -> &SparseMatrix {
        self.generators().e(p, q)
    }
}
