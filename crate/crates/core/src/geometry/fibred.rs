//! Fibred powers and projective-chart expansion.

use super::mapspec::MapSpec;
use crate::error::Result;
use crate::groebner::Ideal;
use crate::polycore::{Coefficient, Poly, Ring, RingMap};

/// All non-decreasing vectors of the given length over 0..options (choice
/// multisets).
fn multisets(length: usize, options: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if options == 0 {
        return out;
    }
    let mut choice = vec![0usize; length];
    loop {
        out.push(choice.clone());
        let mut pos = length;
        let mut advanced = false;
        while pos > 0 {
            pos -= 1;
            if choice[pos] + 1 < options {
                let v = choice[pos] + 1;
                for c in choice.iter_mut().skip(pos) {
                    *c = v;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }
    out
}

/// The i-th fibred power of the map: the target block is shared, the fibre
/// block is replicated i times with fresh primed names, and the source
/// generators are replicated once per copy.
pub fn fibred_power(m: &MapSpec, i: usize) -> Result<MapSpec> {
    assert!(i >= 1, "fibred power index must be positive");
    if i == 1 {
        return Ok(m.clone());
    }
    let d = m.d();
    let base_ring = m.ring();
    let fibre = m.fibre_var_indices();
    let nx = fibre.len();

    // Build the power ring: y-block, then i copies of the x-block.
    let mut names: Vec<String> = (0..d).map(|v| base_ring.var_name(v).to_string()).collect();
    for copy in 0..i {
        for &v in &fibre {
            let mut name = base_ring.var_name(v).to_string();
            for _ in 0..copy {
                name.push('\'');
            }
            while names.contains(&name) {
                name.push('\'');
            }
            names.push(name);
        }
    }
    let ring = Ring::new(names, base_ring.domain());

    // Ring map of the base into copy `c` of the power ring.
    let copy_map = |c: usize| -> RingMap {
        let mut map = Vec::with_capacity(base_ring.nvars());
        for v in 0..base_ring.nvars() {
            if v < d {
                map.push(Some(v));
            } else {
                map.push(Some(d + c * nx + (v - d)));
            }
        }
        RingMap::explicit(base_ring, &ring, map)
    };

    let mut gens: Vec<Poly> = Vec::new();
    let mut hints: Vec<Poly> = Vec::new();
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    for c in 0..i {
        let rm = copy_map(c);
        for g in m.source_ideal.gens() {
            gens.push(g.map_ring(&rm)?);
        }
        for h in &m.split_hints {
            hints.push(h.map_ring(&rm)?);
        }
        for &(a, b) in &m.projective_blocks {
            let a2 = rm.map[a].expect("fibre variable");
            let b2 = rm.map[b].expect("fibre variable");
            blocks.push((a2, b2));
        }
    }

    // Declared base components induce candidate pieces of the power: one
    // mixture per multiset of component choices across the copies. The
    // mixtures still require splitting.
    let mixtures = match &m.source_components {
        None => None,
        Some(comps) => {
            let mut out: Vec<Ideal> = Vec::new();
            for choice in multisets(i, comps.len()) {
                let mut gens_mix: Vec<Poly> = Vec::new();
                for (c, &which) in choice.iter().enumerate() {
                    let rm = copy_map(c);
                    for g in comps[which].gens() {
                        gens_mix.push(g.map_ring(&rm)?);
                    }
                }
                out.push(Ideal::new(&ring, gens_mix));
            }
            Some(out)
        }
    };

    let mut power = MapSpec::new(
        ring.clone(),
        d,
        Ideal::new(&ring, gens),
        m.target_components.clone(),
        m.target_locally_irreducible,
        blocks,
        mixtures,
        hints,
    )?;
    // Mixtures are derived, not asserted irreducible.
    power.components_asserted = false;
    power.symmetric_copies = Some((i, m.projective_blocks.len()));
    Ok(power)
}

/// One affine chart of a projective map.
#[derive(Debug, Clone)]
pub struct Chart {
    pub label: String,
    pub map: MapSpec,
}

/// Expand every P^1 block into its two affine charts (one per choice of the
/// dehomogenized variable); a map with no projective blocks yields itself.
/// On a fibred power the copy-permutation symmetry cuts the enumeration to
/// one chart per choice multiset.
pub fn chart_expand(m: &MapSpec) -> Result<Vec<Chart>> {
    if m.projective_blocks.is_empty() {
        return Ok(vec![Chart {
            label: "affine".to_string(),
            map: m.clone(),
        }]);
    }
    let ring = m.ring().clone();
    let blocks = m.projective_blocks.clone();

    let choice_sets: Vec<Vec<usize>> = match m.symmetric_copies {
        Some((copies, per_copy))
            if copies >= 2 && per_copy >= 1 && blocks.len() == copies * per_copy =>
        {
            // One representative per multiset of per-copy choice masks.
            multisets(copies, 1usize << per_copy)
                .into_iter()
                .map(|choice| {
                    let mut mask_bits = Vec::with_capacity(blocks.len());
                    for copy_mask in choice {
                        for b in 0..per_copy {
                            mask_bits.push((copy_mask >> b) & 1);
                        }
                    }
                    mask_bits
                })
                .collect()
        }
        _ => (0..(1u64 << blocks.len()))
            .map(|mask| {
                (0..blocks.len())
                    .map(|bi| ((mask >> bi) & 1) as usize)
                    .collect()
            })
            .collect(),
    };

    let mut charts = Vec::new();
    for bits in choice_sets {
        let mut chosen_names: Vec<String> = Vec::new();
        let mut label_parts: Vec<String> = Vec::new();
        for (bi, &(a, b)) in blocks.iter().enumerate() {
            // Bit clear: dehomogenize at the second block variable.
            let v = if bits[bi] == 0 { b } else { a };
            chosen_names.push(ring.var_name(v).to_string());
            label_parts.push(format!("{}=1", ring.var_name(v)));
        }
        charts.push(Chart {
            label: label_parts.join(","),
            map: substitute_ones(m, &chosen_names)?,
        });
    }
    Ok(charts)
}

/// Substitute 1 for each named variable, dropping it from the ring.
fn substitute_ones(m: &MapSpec, names: &[String]) -> Result<MapSpec> {
    let mut ring = m.ring().clone();
    let one = Coefficient::one(ring.domain());
    let mut gens: Vec<Poly> = m.source_ideal.gens().to_vec();
    let mut hints: Vec<Poly> = m.split_hints.clone();
    let mut comps: Option<Vec<Vec<Poly>>> = m
        .source_components
        .as_ref()
        .map(|cs| cs.iter().map(|c| c.gens().to_vec()).collect());
    for name in names {
        let idx = ring
            .var_index(name)
            .expect("projective variable in ring");
        let keep: Vec<usize> = (0..ring.nvars()).filter(|&i| i != idx).collect();
        let small = ring.restrict(&keep);
        gens = gens
            .iter()
            .map(|g| g.substitute(idx, &one, &small))
            .collect::<Result<_>>()?;
        hints = hints
            .iter()
            .map(|h| h.substitute(idx, &one, &small))
            .collect::<Result<_>>()?;
        if let Some(cs) = comps {
            comps = Some(
                cs.iter()
                    .map(|c| {
                        c.iter()
                            .map(|g| g.substitute(idx, &one, &small))
                            .collect::<Result<Vec<Poly>>>()
                    })
                    .collect::<Result<_>>()?,
            );
        }
        ring = small;
    }
    let asserted = m.components_asserted;
    let mut out = MapSpec::new(
        ring.clone(),
        m.d(),
        Ideal::new(&ring, gens),
        m.target_components.clone(),
        m.target_locally_irreducible,
        vec![],
        comps.map(|cs| cs.into_iter().map(|c| Ideal::new(&ring, c)).collect()),
        hints,
    )?;
    out.components_asserted = asserted;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::Budget;
    use crate::polycore::parse_poly;

    fn breakpoint(d: usize) -> MapSpec {
        let mut names: Vec<String> = (1..=d).map(|i| format!("y{}", i)).collect();
        names.extend((1..=d).map(|i| format!("x{}", i)));
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let ring = Ring::rational(&refs);
        let gen_text = (1..=d)
            .map(|i| format!("y{}*x{}", i, i))
            .collect::<Vec<_>>()
            .join(" + ");
        let gen = parse_poly(&gen_text, &ring).unwrap();
        MapSpec::new(
            ring.clone(),
            d,
            Ideal::new(&ring, vec![gen]),
            vec![],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn power_one_is_identity() {
        let m = breakpoint(2);
        let p = fibred_power(&m, 1).unwrap();
        assert_eq!(p.ring(), m.ring());
        assert_eq!(p.source_ideal.gens(), m.source_ideal.gens());
    }

    #[test]
    fn breakpoint_square_ring_and_generators() {
        let m = breakpoint(2);
        let p = fibred_power(&m, 2).unwrap();
        assert_eq!(
            p.ring().vars(),
            &["y1", "y2", "x1", "x2", "x1'", "x2'"]
                .map(String::from)
        );
        assert_eq!(p.source_ideal.gens().len(), 2);
        let expect = parse_poly("y1*x1' + y2*x2'", p.ring()).unwrap();
        assert!(p.source_ideal.gens().contains(&expect));
    }

    #[test]
    fn arity_of_third_power() {
        let m = breakpoint(2);
        let p = fibred_power(&m, 3).unwrap();
        assert_eq!(p.ring().nvars(), 2 + 6);
        assert_eq!(p.source_ideal.gens().len(), 3);
    }

    #[test]
    fn affine_map_has_single_chart() {
        let m = breakpoint(2);
        let charts = chart_expand(&m).unwrap();
        assert_eq!(charts.len(), 1);
        assert_eq!(charts[0].label, "affine");
    }

    #[test]
    fn universal_polynomial_charts() {
        // d = 3: x0*l^2 + x1*l*m + x2*m^2 over the block (l:m).
        let ring = Ring::rational(&["x0", "x1", "x2", "l", "m"]);
        let gen = parse_poly("x0*l^2 + x1*l*m + x2*m^2", &ring).unwrap();
        let m = MapSpec::new(
            ring.clone(),
            3,
            Ideal::new(&ring, vec![gen]),
            vec![],
            false,
            vec![(3, 4)],
            None,
            vec![],
        )
        .unwrap();
        let charts = chart_expand(&m).unwrap();
        assert_eq!(charts.len(), 2);
        let mu_chart = &charts[0];
        assert_eq!(mu_chart.label, "m=1");
        let expect = parse_poly("x0*l^2 + x1*l + x2", mu_chart.map.ring()).unwrap();
        assert_eq!(mu_chart.map.source_ideal.gens(), &[expect]);
    }

    #[test]
    fn matrix_example_charts() {
        // X in Y x P^1 with A(l, m)^T = 0 over Y = {det = 0}.
        let ring = Ring::rational(&["a11", "a12", "a21", "a22", "l", "m"]);
        let y_ring = ring.restrict(&[0, 1, 2, 3]);
        let det = parse_poly("a11*a22 - a12*a21", &y_ring).unwrap();
        let gens = vec![
            parse_poly("a11*a22 - a12*a21", &ring).unwrap(),
            parse_poly("a11*l + a12*m", &ring).unwrap(),
            parse_poly("a21*l + a22*m", &ring).unwrap(),
        ];
        let m = MapSpec::new(
            ring.clone(),
            4,
            Ideal::new(&ring, gens),
            vec![Ideal::new(&y_ring, vec![det])],
            true,
            vec![(4, 5)],
            None,
            vec![],
        )
        .unwrap();
        let charts = chart_expand(&m).unwrap();
        assert_eq!(charts.len(), 2);
        let c0 = &charts[0].map; // m=1
        assert!(c0
            .source_ideal
            .gens()
            .contains(&parse_poly("a11*l + a12", c0.ring()).unwrap()));
        let c1 = &charts[1].map; // l=1
        assert!(c1
            .source_ideal
            .gens()
            .contains(&parse_poly("a11 + a12*m", c1.ring()).unwrap()));
    }

    #[test]
    fn projective_block_replicated_in_power() {
        let ring = Ring::rational(&["x0", "x1", "x2", "l", "m"]);
        let gen = parse_poly("x0*l^2 + x1*l*m + x2*m^2", &ring).unwrap();
        let m = MapSpec::new(
            ring.clone(),
            3,
            Ideal::new(&ring, vec![gen]),
            vec![],
            false,
            vec![(3, 4)],
            None,
            vec![],
        )
        .unwrap();
        let p = fibred_power(&m, 2).unwrap();
        assert_eq!(p.projective_blocks.len(), 2);
        // Copy symmetry: 3 charts up to swapping the two copies.
        let charts = chart_expand(&p).unwrap();
        assert_eq!(charts.len(), 3);
        let budget = Budget::default();
        for c in charts {
            assert_eq!(c.map.ring().nvars(), 3 + 2);
            assert!(!c.map.source_ideal.is_unit(&budget).unwrap());
        }
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(
            multisets(2, 3),
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![0, 2],
                vec![1, 1],
                vec![1, 2],
                vec![2, 2]
            ]
        );
        assert_eq!(multisets(4, 2).len(), 5);
    }
}
