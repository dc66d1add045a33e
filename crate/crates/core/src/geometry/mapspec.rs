//! Polynomial maps presented as projections of a source variety onto a
//! target variable block.

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::groebner::{eliminate, Ideal};
use crate::polycore::{Poly, Ring};

/// A polynomial map X -> Y: the restriction to V(source_ideal) of the
/// projection onto the target block. General maps f = (f_1..f_d) are encoded
/// by the graph trick (append y_j − f_j to the source ideal).
#[derive(Debug, Clone)]
pub struct MapSpec {
    /// Full ring: target variables first, then fibre variables.
    ring: Ring,
    /// Number of target variables (the block y_1..y_d).
    d: usize,
    /// Ring of the target variables only.
    y_ring: Ring,
    /// Defining ideal of X inside the product.
    pub source_ideal: Ideal,
    /// Irreducible target components (ideals in the Y-ring); empty means
    /// the target is all of C^d.
    pub target_components: Vec<Ideal>,
    /// Whether the (declared) target is asserted locally irreducible.
    pub target_locally_irreducible: bool,
    /// Projective P^1 blocks among the fibre variables (pairs of indices
    /// into the full ring); generators must be homogeneous per block.
    pub projective_blocks: Vec<(usize, usize)>,
    /// Declared source components (full-ring ideals), or None when the
    /// engine must split the source itself.
    pub source_components: Option<Vec<Ideal>>,
    /// Declared components are trusted as irreducible.
    pub components_asserted: bool,
    /// Splitting candidates visible in the input syntax.
    pub split_hints: Vec<Poly>,
    /// Set on fibred powers: (copy count, projective blocks per copy), with
    /// projective_blocks ordered copy-major. Copy permutations act on the
    /// power, so charts are only needed up to choice multisets.
    pub symmetric_copies: Option<(usize, usize)>,
}

impl MapSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        ring: Ring,
        d: usize,
        source_ideal: Ideal,
        target_components: Vec<Ideal>,
        target_locally_irreducible: bool,
        projective_blocks: Vec<(usize, usize)>,
        source_components: Option<Vec<Ideal>>,
        split_hints: Vec<Poly>,
    ) -> Result<MapSpec> {
        if d < 1 {
            return Err(Error::Precondition("target block must be nonempty".into()));
        }
        if d > ring.nvars() {
            return Err(Error::Precondition(
                "target block larger than the ring".into(),
            ));
        }
        ring.check_same(source_ideal.ring())?;
        let y_ring = ring.restrict(&(0..d).collect::<Vec<_>>());
        for comp in &target_components {
            y_ring.check_same(comp.ring())?;
        }
        let mut seen = vec![false; ring.nvars()];
        for &(a, b) in &projective_blocks {
            if a < d || b < d || a >= ring.nvars() || b >= ring.nvars() || a == b {
                return Err(Error::Precondition(
                    "projective block must be a pair of distinct fibre variables".into(),
                ));
            }
            if seen[a] || seen[b] {
                return Err(Error::Precondition(
                    "projective blocks must be disjoint".into(),
                ));
            }
            seen[a] = true;
            seen[b] = true;
            for g in source_ideal.gens() {
                if !g.is_homogeneous_in(&[a, b]) {
                    return Err(Error::NonHomogeneous(format!(
                        "generator {} in block ({}, {})",
                        g,
                        ring.var_name(a),
                        ring.var_name(b)
                    )));
                }
            }
        }
        if let Some(comps) = &source_components {
            for c in comps {
                ring.check_same(c.ring())?;
            }
        }
        let asserted = source_components.is_some();
        Ok(MapSpec {
            ring,
            d,
            y_ring,
            source_ideal,
            target_components,
            target_locally_irreducible,
            projective_blocks,
            source_components,
            components_asserted: asserted,
            split_hints,
            symmetric_copies: None,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn y_ring(&self) -> &Ring {
        &self.y_ring
    }

    /// Number of target variables.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn target_var_indices(&self) -> Vec<usize> {
        (0..self.d).collect()
    }

    pub fn fibre_var_indices(&self) -> Vec<usize> {
        (self.d..self.ring.nvars()).collect()
    }

    pub fn is_affine(&self) -> bool {
        self.projective_blocks.is_empty()
    }

    /// Same map data over a different source ideal (used for restrictions to
    /// components and strata). The replacement need not share the copy
    /// symmetry of a fibred power.
    pub fn with_source(&self, source: Ideal) -> MapSpec {
        MapSpec {
            source_ideal: source,
            source_components: None,
            components_asserted: false,
            symmetric_copies: None,
            ..self.clone()
        }
    }

    /// Ideal of the Zariski closure of the projection of V(I) to the target
    /// block, in the Y-ring.
    pub fn image_closure_of(&self, ideal: &Ideal, budget: &Budget) -> Result<Ideal> {
        self.ring.check_same(ideal.ring())?;
        eliminate(ideal, &self.fibre_var_indices(), budget)
    }

    pub fn image_closure(&self, budget: &Budget) -> Result<Ideal> {
        self.image_closure_of(&self.source_ideal, budget)
    }
}

/// Ideal of the Zariski closure of the projection of V(I) onto the given
/// target block (free-standing form of the operation).
pub fn image_closure(ideal: &Ideal, target_block: &[usize], budget: &Budget) -> Result<Ideal> {
    let drop: Vec<usize> = (0..ideal.ring().nvars())
        .filter(|i| !target_block.contains(i))
        .collect();
    eliminate(ideal, &drop, budget)
}
