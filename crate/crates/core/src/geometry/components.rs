//! Heuristic component splitting by iterated saturation.
//!
//! V(I) is split recursively as V(I : g^∞) ∪ V(I + ⟨g⟩) for candidates g
//! drawn, in order, from monomial factors of generators, syntactic factor
//! hints, leading coefficients of Gröbner basis elements with respect to
//! each single variable, and caller-supplied extras (the target-block
//! variables). This is not a complete minimal-prime decomposition; hidden
//! components are hunted separately by the finite-field oracle.

use std::collections::VecDeque;

use super::dimension::dimension;
use crate::config::Budget;
use crate::error::Result;
use crate::groebner::{saturate, Ideal};
use crate::polycore::{Coefficient, Monomial, Poly, CANONICAL_ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PieceTag {
    AssertedIrreducible,
    SplitPiece,
}

#[derive(Debug, Clone)]
pub struct Component {
    pub ideal: Ideal,
    pub dim: i64,
    pub tag: PieceTag,
}

#[derive(Debug, Clone)]
pub struct ComponentSet {
    pub pieces: Vec<Component>,
    /// Log of the saturation splits performed.
    pub provenance: Vec<String>,
    /// Whether any saturation split was performed (heuristic, not asserted).
    pub split_performed: bool,
}

/// Leading coefficient of p viewed as a univariate polynomial in variable v,
/// with the v-powers stripped.
fn leading_coeff_in_var(p: &Poly, v: usize) -> Poly {
    let d = p.degree_in_var(v);
    let ring = p.ring().clone();
    let terms: Vec<(Monomial, Coefficient)> = p
        .terms()
        .iter()
        .filter(|(m, _)| m.0[v] == d)
        .map(|(m, c)| {
            let mut e = m.0.clone();
            e[v] = 0;
            (Monomial(e), c.clone())
        })
        .collect();
    Poly::from_terms(&ring, terms)
}

fn push_candidate(out: &mut Vec<Poly>, cand: Poly) {
    if cand.is_zero() || cand.is_constant() {
        return;
    }
    let cand = cand.primitive_part();
    // A monomial candidate splits finer through its variables.
    if cand.num_terms() == 1 {
        let (m, _) = &cand.terms()[0];
        for v in m.support() {
            let var = Poly::var(cand.ring(), v);
            if !out.contains(&var) {
                out.push(var);
            }
        }
        return;
    }
    if !out.contains(&cand) {
        out.push(cand);
    }
}

fn collect_candidates(piece: &Ideal, hints: &[Poly], extra: &[Poly], budget: &Budget) -> Result<Vec<Poly>> {
    let mut out: Vec<Poly> = Vec::new();
    // (a) monomial factors of generators.
    for g in piece.gens() {
        if let Some(content) = g.monomial_content() {
            for v in content.support() {
                push_candidate(&mut out, Poly::var(piece.ring(), v));
            }
        }
    }
    // (b) factors visible in the input syntax.
    for h in hints {
        if h.ring() == piece.ring() {
            push_candidate(&mut out, h.clone());
        }
    }
    // (c) leading coefficients of basis elements with respect to each
    // variable.
    let gb = piece.groebner_basis(&CANONICAL_ORDER, budget)?;
    for p in gb.iter() {
        for v in p.support() {
            let lc = leading_coeff_in_var(p, v);
            push_candidate(&mut out, lc);
        }
        // Monomial content of basis elements, too.
        if let Some(content) = p.monomial_content() {
            for v in content.support() {
                push_candidate(&mut out, Poly::var(piece.ring(), v));
            }
        }
    }
    // (d) caller extras (target-block variables).
    for e in extra {
        push_candidate(&mut out, e.clone());
    }
    Ok(out)
}

/// Split V(I) into candidate-irreducible pieces with dimensions attached.
/// Unit pieces are dropped; pieces whose variety is contained in another
/// piece (certified by membership of the larger piece's generators) are
/// discarded.
pub fn split_components(
    ideal: &Ideal,
    hints: &[Poly],
    extra: &[Poly],
    budget: &Budget,
) -> Result<ComponentSet> {
    let mut work: VecDeque<Ideal> = VecDeque::new();
    work.push_back(ideal.clone());
    let mut final_pieces: Vec<Ideal> = Vec::new();
    let mut provenance: Vec<String> = Vec::new();
    let mut split_performed = false;

    while let Some(piece) = work.pop_front() {
        if piece.is_unit(budget)? {
            continue;
        }
        let candidates = collect_candidates(&piece, hints, extra, budget)?;
        let mut split = None;
        for g in &candidates {
            if piece.contains(g, budget)? {
                continue;
            }
            let sat = saturate(&piece, g, budget)?;
            if piece.contains_ideal(&sat, budget)? {
                // sat == piece: g is not a zero divisor direction.
                continue;
            }
            split = Some((sat, piece.with_extra(std::slice::from_ref(g)), g.clone()));
            break;
        }
        match split {
            Some((sat, plus, g)) => {
                provenance.push(format!("split by {}", g));
                split_performed = true;
                work.push_back(sat);
                work.push_back(plus);
            }
            None => final_pieces.push(piece.canonicalize(budget)?),
        }
    }

    // Drop exact duplicates and pieces contained in another piece.
    let mut printed: Vec<(String, Ideal)> = Vec::new();
    for p in final_pieces {
        let key = p.canonical_print(budget)?;
        if !printed.iter().any(|(k, _)| *k == key) {
            printed.push((key, p));
        }
    }
    printed.sort_by(|a, b| a.0.cmp(&b.0));
    let mut keep: Vec<bool> = vec![true; printed.len()];
    for i in 0..printed.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..printed.len() {
            if i == j || !keep[j] {
                continue;
            }
            // V(i) ⊆ V(j) iff gens(j) ⊆ ideal(i); drop i then.
            if printed[i].1.contains_ideal(&printed[j].1, budget)? {
                keep[i] = false;
                break;
            }
        }
    }

    let mut pieces = Vec::new();
    for (i, (_, p)) in printed.into_iter().enumerate() {
        if keep[i] {
            let dim = dimension(&p, budget)?;
            pieces.push(Component {
                ideal: p,
                dim,
                tag: PieceTag::SplitPiece,
            });
        }
    }
    Ok(ComponentSet {
        pieces,
        provenance,
        split_performed,
    })
}
