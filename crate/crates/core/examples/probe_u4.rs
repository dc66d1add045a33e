use appnum_core::analysis::quasiopen;
use appnum_core::geometry::{chart_expand, fibred_power, MapSpec};
use appnum_core::groebner::Ideal;
use appnum_core::polycore::{parse_poly, Ring};
use appnum_core::Config;
use std::time::Instant;

fn universal(d: usize) -> MapSpec {
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
            if le > 0 { parts.push(if le == 1 { "l".into() } else { format!("l^{}", le) }); }
            if me > 0 { parts.push(if me == 1 { "m".into() } else { format!("m^{}", me) }); }
            parts.join("*")
        })
        .collect();
    let gen = parse_poly(&terms.join(" + "), &ring).unwrap();
    MapSpec::new(ring.clone(), d, Ideal::new(&ring, vec![gen]), vec![], false, vec![(d, d + 1)], None, vec![]).unwrap()
}

fn main() {
    let cfg = Config::default();
    let m = universal(4);
    for i in 1..=4 {
        let t = Instant::now();
        let p = fibred_power(&m, i).unwrap();
        let charts = chart_expand(&p).unwrap();
        eprintln!("power {}: {} charts", i, charts.len());
        for c in &charts {
            let t2 = Instant::now();
            let q = quasiopen(&c.map, &cfg).unwrap();
            eprintln!("  chart {}: quasiopen={} pieces={} ({:.1}s)", c.label, q.quasiopen, q.pieces.len(), t2.elapsed().as_secs_f64());
        }
        eprintln!("power {} total: {:.1}s", i, t.elapsed().as_secs_f64());
    }
}
