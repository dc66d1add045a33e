//! Builders for the example maps exercised across the integration tests.

use appnum_core::groebner::Ideal;
use appnum_core::geometry::MapSpec;
use appnum_core::polycore::{parse_poly, Poly, Ring};

pub fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(
        ring,
        gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
    )
}

pub fn polys(ring: &Ring, texts: &[&str]) -> Vec<Poly> {
    texts.iter().map(|s| parse_poly(s, ring).unwrap()).collect()
}

/// The hypersurface y1 x1 + ... + yd xd = 0 under the first projection.
pub fn breakpoint(d: usize) -> MapSpec {
    let mut names: Vec<String> = (1..=d).map(|i| format!("y{}", i)).collect();
    names.extend((1..=d).map(|i| format!("x{}", i)));
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = Ring::rational(&refs);
    let gen_text = (1..=d)
        .map(|i| format!("y{}*x{}", i, i))
        .collect::<Vec<_>>()
        .join(" + ");
    MapSpec::new(
        ring.clone(),
        d,
        ideal(&ring, &[&gen_text]),
        vec![],
        false,
        vec![],
        None,
        vec![],
    )
    .unwrap()
}

/// Projection of the cross-bundle: the target is the union of two 2-planes
/// in C^4 and the source adds y1 x1 + y2 x2 = 0.
pub fn notopen() -> MapSpec {
    let ring = Ring::rational(&["y1", "y2", "y3", "y4", "x1", "x2"]);
    let y_ring = ring.restrict(&[0, 1, 2, 3]);
    let cross = ["y1*y3", "y1*y4", "y2*y3", "y2*y4"];
    let mut gens: Vec<&str> = cross.to_vec();
    gens.push("y1*x1 + y2*x2");
    MapSpec::new(
        ring.clone(),
        4,
        ideal(&ring, &gens),
        vec![ideal(&y_ring, &["y3", "y4"]), ideal(&y_ring, &["y1", "y2"])],
        false,
        vec![],
        None,
        vec![],
    )
    .unwrap()
}

/// Disjoint-sum example with n = 2, d1 = d2 = 1: the target is the union of
/// the two axes of C^2 and the source is the disjoint sum of the two
/// one-block bundles, glued along an indicator variable s.
pub fn example_d() -> MapSpec {
    let ring = Ring::rational(&["y11", "y21", "x1", "x2", "s"]);
    let y_ring = ring.restrict(&[0, 1]);
    // X_1 at s = 0: components {y11 = 0} and {y21 = x1 = 0};
    // X_2 at s = 1: components {y21 = 0} and {y11 = x2 = 0}.
    let comps = vec![
        ideal(&ring, &["s", "y11"]),
        ideal(&ring, &["s", "y21", "x1"]),
        ideal(&ring, &["s - 1", "y21"]),
        ideal(&ring, &["s - 1", "y11", "x2"]),
    ];
    // Total ideal: intersection of (I1 + s) and (I2 + (s-1)).
    let budget = appnum_core::Budget::default();
    let i1 = ideal(&ring, &["y11*y21", "y11*x1", "s"]);
    let i2 = ideal(&ring, &["y11*y21", "y21*x2", "s - 1"]);
    let total = appnum_core::groebner::intersect(&i1, &i2, &budget).unwrap();
    MapSpec::new(
        ring.clone(),
        2,
        total,
        vec![ideal(&y_ring, &["y21"]), ideal(&y_ring, &["y11"])],
        false,
        vec![],
        Some(comps),
        vec![],
    )
    .unwrap()
}

/// Kernel lines of singular 2x2 matrices: X in Y x P^1, A(l, m)^T = 0, over
/// the determinant hypersurface Y.
pub fn matrix_example() -> MapSpec {
    let ring = Ring::rational(&["a11", "a12", "a21", "a22", "l", "m"]);
    let y_ring = ring.restrict(&[0, 1, 2, 3]);
    MapSpec::new(
        ring.clone(),
        4,
        ideal(
            &ring,
            &[
                "a11*a22 - a12*a21",
                "a11*l + a12*m",
                "a21*l + a22*m",
            ],
        ),
        vec![ideal(&y_ring, &["a11*a22 - a12*a21"])],
        true,
        vec![(4, 5)],
        None,
        vec![],
    )
    .unwrap()
}

/// The matrix example re-embedded as the hypersurface xy = zw (f of the
/// more-data pair).
pub fn moredata_f() -> MapSpec {
    let ring = Ring::rational(&["x", "y", "z", "w", "l", "m"]);
    let y_ring = ring.restrict(&[0, 1, 2, 3]);
    MapSpec::new(
        ring.clone(),
        4,
        ideal(&ring, &["x*y - z*w", "x*l + z*m", "w*l + y*m"]),
        vec![ideal(&y_ring, &["x*y - z*w"])],
        true,
        vec![(4, 5)],
        None,
        vec![],
    )
    .unwrap()
}

/// The companion map g on the same target: x l^2 + y l m + (z - w) m^2 = 0.
pub fn moredata_g() -> MapSpec {
    let ring = Ring::rational(&["x", "y", "z", "w", "l", "m"]);
    let y_ring = ring.restrict(&[0, 1, 2, 3]);
    MapSpec::new(
        ring.clone(),
        4,
        ideal(
            &ring,
            &["x*y - z*w", "x*l^2 + y*l*m + (z - w)*m^2"],
        ),
        vec![ideal(&y_ring, &["x*y - z*w"])],
        true,
        vec![(4, 5)],
        None,
        vec![],
    )
    .unwrap()
}

/// Universal homogeneous polynomial of degree d - 1 on P^1 over C^d.
pub fn universal(d: usize) -> MapSpec {
    let mut names: Vec<String> = (0..d).map(|i| format!("x{}", i)).collect();
    names.push("l".into());
    names.push("m".into());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let ring = Ring::rational(&refs);
    let terms: Vec<String> = (0..d)
        .map(|i| {
            let le = d - 1 - i;
            let me = i;
            let mut parts = vec![format!("x{}", i)];
            if le > 0 {
                parts.push(if le == 1 { "l".into() } else { format!("l^{}", le) });
            }
            if me > 0 {
                parts.push(if me == 1 { "m".into() } else { format!("m^{}", me) });
            }
            parts.join("*")
        })
        .collect();
    let gen = terms.join(" + ");
    MapSpec::new(
        ring.clone(),
        d,
        ideal(&ring, &[&gen]),
        vec![],
        false,
        vec![(d, d + 1)],
        None,
        vec![],
    )
    .unwrap()
}

/// Blowup chart (y1, t) -> (y1, y1 t).
pub fn blowup() -> MapSpec {
    let ring = Ring::rational(&["y1", "y2", "t"]);
    MapSpec::new(
        ring.clone(),
        2,
        ideal(&ring, &["y2 - y1*t"]),
        vec![],
        false,
        vec![],
        None,
        vec![],
    )
    .unwrap()
}

/// Coordinate projection C^3 -> C^2.
pub fn projection() -> MapSpec {
    let ring = Ring::rational(&["y1", "y2", "x1"]);
    MapSpec::new(
        ring.clone(),
        2,
        Ideal::zero(&ring),
        vec![],
        false,
        vec![],
        None,
        vec![],
    )
    .unwrap()
}
