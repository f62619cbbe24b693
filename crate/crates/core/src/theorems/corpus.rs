use crate::error::{Error, Result};
use crate::graph::DEFAULT_COLORING_CAP;
use crate::group::{FiniteGroup, GroupSpec, DEFAULT_MAX_ORDER};
use crate::numtheory;

/// Corpus and sweep limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    /// `Z_n` for `n <= cyclic_max` in the corpus.
    pub cyclic_max: usize,
    /// `D_n` for `3 <= n <= dihedral_max` in the corpus.
    pub dihedral_max: usize,
    /// `U(Z_n)` for `n <= units_max` in the corpus.
    pub units_max: usize,
    /// `(Z_p)^k` with `p^k <= elementary_abelian_max` in the corpus.
    pub elementary_abelian_max: usize,
    /// Range `1..=sweep_max` of the `Z_n` and `U(Z_n)` star sweeps.
    pub sweep_max: usize,
    /// Range `3..=dihedral_sweep_max` of the dihedral star sweep.
    pub dihedral_sweep_max: usize,
    /// Cyclic groups of prime-power order up to this bound.
    pub prime_power_max: u64,
    /// Prime pairs with product up to this bound.
    pub shape_max_product: u64,
    /// Prime triples with product up to this bound.
    pub triple_max_product: u64,
    /// Optional cap on the primes used in pairs and triples.
    pub max_prime: Option<u64>,
    pub max_order: usize,
    pub coloring_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            cyclic_max: 60,
            dihedral_max: 20,
            units_max: 60,
            elementary_abelian_max: 64,
            sweep_max: 200,
            dihedral_sweep_max: 50,
            prime_power_max: 128,
            shape_max_product: 150,
            triple_max_product: 105,
            max_prime: None,
            max_order: DEFAULT_MAX_ORDER,
            coloring_cap: DEFAULT_COLORING_CAP,
        }
    }
}

/// Products and small permutation groups always present when they fit.
const FIXED_MEMBERS: &[&str] = &[
    "S:3",
    "S:4",
    "S:5",
    "A:4",
    "A:5",
    "Z:2xZ:2",
    "Z:2xZ:4",
    "Z:3xZ:3",
    "Z:2xZ:6",
    "Z:3xZ:5",
    "Z:4xZ:4",
    "Z:2xZ:2xZ:3",
    "Z:2xD:4",
    "Z:3xS:3",
    "Z:2xA:4",
];

impl Bounds {
    /// The smallest useful bounds: `Z_1..Z_8` and little else.
    pub fn minimal() -> Self {
        Self {
            cyclic_max: 8,
            dihedral_max: 4,
            units_max: 8,
            elementary_abelian_max: 8,
            sweep_max: 8,
            dihedral_sweep_max: 8,
            prime_power_max: 8,
            shape_max_product: 15,
            triple_max_product: 30,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let cap = |what: &'static str, size: u64, cap: u64| {
            if size > cap {
                Err(Error::CapExceeded { what, size, cap })
            } else {
                Ok(())
            }
        };
        let max = self.max_order as u64;
        cap("cyclic corpus bound", self.cyclic_max as u64, max)?;
        cap("dihedral corpus order", 2 * self.dihedral_max as u64, max)?;
        cap("elementary abelian bound", self.elementary_abelian_max as u64, max)?;
        cap("sweep bound", self.sweep_max as u64, max)?;
        cap("units corpus bound", self.units_max as u64, max)?;
        cap("dihedral sweep order", 2 * self.dihedral_sweep_max as u64, max)?;
        cap("prime power bound", self.prime_power_max, max.min(self.coloring_cap as u64))?;
        cap("pair product bound", self.shape_max_product, max)?;
        cap("triple product bound", self.triple_max_product, max)?;
        Ok(())
    }
}

/// Deterministic corpus: `Z_n`, `D_n`, `U(Z_n)`, elementary abelian groups,
/// then [`FIXED_MEMBERS`], each kept once by spec string.
pub fn build_corpus(bounds: &Bounds) -> Result<Vec<FiniteGroup>> {
    let mut specs: Vec<GroupSpec> = Vec::new();
    specs.extend((1..=bounds.cyclic_max).map(GroupSpec::Cyclic));
    specs.extend((3..=bounds.dihedral_max).map(GroupSpec::Dihedral));
    specs.extend((1..=bounds.units_max).map(GroupSpec::Units));
    for p in numtheory::primes_up_to(bounds.elementary_abelian_max) {
        let mut k = 1;
        while p.pow(k) <= bounds.elementary_abelian_max {
            specs.push(GroupSpec::ElementaryAbelian { p, k });
            k += 1;
        }
    }
    for s in FIXED_MEMBERS {
        specs.push(s.parse()?);
    }

    let mut seen = std::collections::HashSet::new();
    let mut corpus = Vec::new();
    for spec in specs {
        let fits = spec.order().is_some_and(|o| o <= bounds.max_order as u64);
        if fits && seen.insert(spec.to_string()) {
            corpus.push(spec.build(bounds.max_order)?);
        }
    }
    Ok(corpus)
}
