//! Dev probe: scan chain parameters at table bucket edges and print what
//! verifies, to refresh the shipped defaults table.
use antoine::geom::{Circle3, Dir3, Point3, SolidTorus};
use antoine::necklace::{verify_chain, ChainParams, OrientationPattern};

fn main() {
    for ratio in [0.0607, 0.1, 0.12, 0.15, 0.2, 0.25, 0.3] {
        let parent =
            SolidTorus::new(Circle3::new(Point3::ORIGIN, 1.0, Dir3::z()).unwrap(), ratio).unwrap();
        let q_min = {
            let q = (std::f64::consts::PI / ratio.asin()).ceil() as usize;
            if q % 2 == 0 { q } else { q + 1 }
        };
        let mut found = false;
        for q in (q_min..q_min + 60).step_by(2) {
            let mut best: Option<(f64, f64, f64, f64, f64)> = None;
            for ms in [1.08, 1.12, 1.16, 1.2, 1.24, 1.28, 1.32] {
                for mr in [0.12] {
                    let params = ChainParams {
                        q,
                        child_major_scale: ms,
                        child_minor_ratio: mr,
                        orientation_pattern: OrientationPattern::Alternating,
                    };
                    let chain = match antoine::necklace::build_simple_chain(&parent, &params) {
                        Ok(c) => c,
                        Err(_) => continue,
                    };
                    let rep = verify_chain(&chain);
                    if rep.all_ok() {
                        let score = rep.min_separation.min(rep.min_containment_margin) / ratio;
                        if best.map(|b| score > b.0).unwrap_or(true) {
                            best = Some((score, ms, mr, rep.min_separation, rep.min_containment_margin));
                        }
                    }
                }
            }
            if let Some((score, ms, mr, sep, margin)) = best.filter(|b| b.0 >= 0.005) {
                println!(
                    "ratio {ratio}: q={q} ms={ms} mr={mr} score={score:.4} sep={sep:.5} margin={margin:.5}"
                );
                found = true;
                break;
            }
        }
        if !found {
            println!("ratio {ratio}: NOTHING FOUND in q {q_min}..{}", q_min + 60);
        }
    }
}
