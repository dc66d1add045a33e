//! Line-oriented map-file format: `key: value` pairs describing the map,
//! followed by an optional `[options]` section. The exact grammar is
//! documented in docs/format.md.

use appnum_core::error::{Error, Result};
use appnum_core::geometry::MapSpec;
use appnum_core::groebner::{intersect, Ideal};
use appnum_core::polycore::{parse_poly, parse_poly_factors, Poly, Ring};
use appnum_core::Budget;

/// Analysis options pinned inside a map file.
#[derive(Debug, Clone, Default)]
pub struct FileOptions {
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub slice_bound: Option<i64>,
    pub slice_reps: Option<u32>,
}

#[derive(Debug, Clone)]
pub struct MapFile {
    pub map: MapSpec,
    pub options: FileOptions,
}

fn err(line_no: usize, msg: impl Into<String>) -> Error {
    Error::MapFile(format!("line {}: {}", line_no, msg.into()))
}

pub fn parse_map_file(text: &str) -> Result<MapFile> {
    #[derive(Default)]
    struct Raw {
        target_vars: Vec<String>,
        fibre_vars: Vec<String>,
        projective_blocks: Vec<(String, String)>,
        source_ideal: Vec<String>,
        map_polynomials: Vec<String>,
        target_components: Vec<Vec<String>>,
        source_components: Vec<Vec<String>>,
        target_locally_irreducible: bool,
    }
    let mut raw = Raw::default();
    let mut options = FileOptions::default();
    let mut in_options = false;

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "[options]" {
            in_options = true;
            continue;
        }
        if line.starts_with('[') {
            return Err(err(line_no, format!("unknown section `{}`", line)));
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| err(line_no, "expected `key: value`"))?;
        let key = key.trim();
        let value = value.trim();
        if in_options {
            match key {
                "seed" => {
                    options.seed =
                        Some(value.parse().map_err(|_| err(line_no, "bad seed"))?)
                }
                "budget" => {
                    options.budget =
                        Some(value.parse().map_err(|_| err(line_no, "bad budget"))?)
                }
                "slice_bound" => {
                    options.slice_bound =
                        Some(value.parse().map_err(|_| err(line_no, "bad slice_bound"))?)
                }
                "slice_reps" => {
                    options.slice_reps =
                        Some(value.parse().map_err(|_| err(line_no, "bad slice_reps"))?)
                }
                other => return Err(err(line_no, format!("unknown option `{}`", other))),
            }
            continue;
        }
        let words = || value.split_whitespace().map(String::from).collect::<Vec<_>>();
        let polys = || {
            value
                .split(';')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
        };
        match key {
            "target_vars" => raw.target_vars = words(),
            "fibre_vars" => raw.fibre_vars = words(),
            "projective_block" => {
                let w = words();
                if w.len() != 2 {
                    return Err(err(line_no, "projective_block needs exactly two variables"));
                }
                raw.projective_blocks.push((w[0].clone(), w[1].clone()));
            }
            "source_ideal" => raw.source_ideal.extend(polys()),
            "map_polynomials" => raw.map_polynomials.extend(polys()),
            "target_component" => raw.target_components.push(polys()),
            "source_component" => raw.source_components.push(polys()),
            "target_locally_irreducible" => {
                raw.target_locally_irreducible = match value {
                    "true" => true,
                    "false" => false,
                    _ => return Err(err(line_no, "expected true or false")),
                }
            }
            other => return Err(err(line_no, format!("unknown key `{}`", other))),
        }
    }

    if raw.target_vars.is_empty() {
        return Err(Error::MapFile("missing target_vars".into()));
    }
    let mut names = raw.target_vars.clone();
    names.extend(raw.fibre_vars.iter().cloned());
    {
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::MapFile(format!("duplicate variable `{}`", n)));
            }
        }
    }
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = Ring::rational(&refs);
    let d = raw.target_vars.len();
    let y_ring = ring.restrict(&(0..d).collect::<Vec<_>>());

    // Source generators, keeping syntactic factors as splitting hints.
    let mut gens: Vec<Poly> = Vec::new();
    let mut hints: Vec<Poly> = Vec::new();
    for text in &raw.source_ideal {
        let (p, factors) = parse_poly_factors(text, &ring)?;
        if factors.len() > 1 {
            hints.extend(factors.into_iter().filter(|f| !f.is_constant()));
        }
        gens.push(p);
    }
    // Graph trick: map_polynomials f_j append y_j - f_j.
    if !raw.map_polynomials.is_empty() {
        if raw.map_polynomials.len() != d {
            return Err(Error::MapFile(format!(
                "map_polynomials must list exactly {} polynomials",
                d
            )));
        }
        for (j, text) in raw.map_polynomials.iter().enumerate() {
            let f = parse_poly(text, &ring)?;
            let y = Poly::var(&ring, j);
            gens.push(y.sub(&f)?);
        }
    }

    let source_components = if raw.source_components.is_empty() {
        None
    } else {
        let mut comps = Vec::new();
        for c in &raw.source_components {
            let mut cg = Vec::new();
            for t in c {
                cg.push(parse_poly(t, &ring)?);
            }
            comps.push(Ideal::new(&ring, cg));
        }
        Some(comps)
    };

    // A map file may declare only source components; the total ideal is
    // their intersection.
    let source_ideal = if gens.is_empty() {
        match &source_components {
            Some(comps) if !comps.is_empty() => {
                let budget = Budget::default();
                let mut acc = comps[0].clone();
                for c in &comps[1..] {
                    acc = intersect(&acc, c, &budget)?;
                }
                acc
            }
            _ => Ideal::zero(&ring),
        }
    } else {
        Ideal::new(&ring, gens)
    };

    let mut target_components = Vec::new();
    for c in &raw.target_components {
        let mut cg = Vec::new();
        for t in c {
            cg.push(parse_poly(t, &y_ring)?);
        }
        target_components.push(Ideal::new(&y_ring, cg));
    }

    let mut blocks = Vec::new();
    for (a, b) in &raw.projective_blocks {
        let ai = ring
            .var_index(a)
            .ok_or_else(|| Error::UnknownVariable(a.clone()))?;
        let bi = ring
            .var_index(b)
            .ok_or_else(|| Error::UnknownVariable(b.clone()))?;
        blocks.push((ai, bi));
    }

    let map = MapSpec::new(
        ring,
        d,
        source_ideal,
        target_components,
        raw.target_locally_irreducible,
        blocks,
        source_components,
        hints,
    )?;
    Ok(MapFile { map, options })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let mf = parse_map_file(
            "target_vars: y1 y2\nfibre_vars: x1 x2\nsource_ideal: y1*x1 + y2*x2\n",
        )
        .unwrap();
        assert_eq!(mf.map.d(), 2);
        assert_eq!(mf.map.ring().nvars(), 4);
    }

    #[test]
    fn unknown_key_rejected() {
        let e = parse_map_file("target_vars: y\nfibre_vars: x\nbogus: 1\n");
        assert!(matches!(e, Err(Error::MapFile(_))));
    }

    #[test]
    fn options_section() {
        let mf = parse_map_file(
            "target_vars: y\nfibre_vars: x\nsource_ideal: y - x^2\n[options]\nseed: 7\nslice_reps: 5\n",
        )
        .unwrap();
        assert_eq!(mf.options.seed, Some(7));
        assert_eq!(mf.options.slice_reps, Some(5));
        assert_eq!(mf.options.budget, None);
    }

    #[test]
    fn graph_trick() {
        let mf =
            parse_map_file("target_vars: y1\nfibre_vars: x1\nmap_polynomials: x1^2\n").unwrap();
        assert_eq!(mf.map.source_ideal.gens().len(), 1);
    }

    #[test]
    fn duplicate_variable_rejected() {
        let e = parse_map_file("target_vars: y y\nfibre_vars: x\n");
        assert!(e.is_err());
    }

    #[test]
    fn product_generators_become_hints() {
        let mf = parse_map_file(
            "target_vars: y\nfibre_vars: x\nsource_ideal: (y - x)*(y + x)\n",
        )
        .unwrap();
        assert_eq!(mf.map.split_hints.len(), 2);
    }
}
