//! Critical values with respect to the Remmert rank: the union of the image
//! closures of all strata of rank below the target dimension. The result
//! must be lower-dimensional (it is a first-category set).

use crate::config::Budget;
use crate::error::{Error, Result};
use crate::geometry::dimension;
use crate::groebner::{intersect, Ideal};
use crate::polycore::Ring;

use super::stratum::Stratum;

pub fn critical_values(
    strata: &[Stratum],
    d: i64,
    y_ring: &Ring,
    budget: &Budget,
) -> Result<Ideal> {
    let mut acc = Ideal::unit(y_ring);
    for s in strata {
        if s.r < d {
            acc = intersect(&acc, &s.image_ideal, budget)?;
        }
    }
    let dim = dimension(&acc, budget)?;
    if dim >= d {
        return Err(Error::InternalContradiction(format!(
            "critical value set has dimension {} >= target dimension {}",
            dim, d
        )));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::rank_partition;
    use crate::config::Config;
    use crate::geometry::MapSpec;
    use crate::polycore::parse_poly;

    fn map(ring: &Ring, d: usize, gens: &[&str]) -> MapSpec {
        MapSpec::new(
            ring.clone(),
            d,
            Ideal::new(
                ring,
                gens.iter().map(|s| parse_poly(s, ring).unwrap()).collect(),
            ),
            vec![],
            false,
            vec![],
            None,
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn blowup_critical_values_are_origin() {
        let ring = Ring::rational(&["y1", "y2", "t"]);
        let m = map(&ring, 2, &["y2 - y1*t"]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        let cv = critical_values(&strata, 2, m.y_ring(), &cfg.budget).unwrap();
        let y_ring = m.y_ring().clone();
        let origin = Ideal::new(
            &y_ring,
            vec![
                parse_poly("y1", &y_ring).unwrap(),
                parse_poly("y2", &y_ring).unwrap(),
            ],
        );
        assert!(cv.equals(&origin, &cfg.budget).unwrap());
    }

    #[test]
    fn open_projection_has_no_critical_values() {
        let ring = Ring::rational(&["y1", "y2", "x1"]);
        let m = map(&ring, 2, &[]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        let cv = critical_values(&strata, 2, m.y_ring(), &cfg.budget).unwrap();
        assert!(cv.is_unit(&cfg.budget).unwrap());
    }

    #[test]
    fn breakpoint_critical_values_are_origin() {
        let ring = Ring::rational(&["y1", "y2", "x1", "x2"]);
        let m = map(&ring, 2, &["y1*x1 + y2*x2"]);
        let cfg = Config::default();
        let strata = rank_partition(&m, "", &cfg).unwrap();
        let cv = critical_values(&strata, 2, m.y_ring(), &cfg.budget).unwrap();
        let y_ring = m.y_ring().clone();
        let origin = Ideal::new(
            &y_ring,
            vec![
                parse_poly("y1", &y_ring).unwrap(),
                parse_poly("y2", &y_ring).unwrap(),
            ],
        );
        assert!(cv.equals(&origin, &cfg.budget).unwrap());
    }
}
