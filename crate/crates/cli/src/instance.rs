use fpcoh_core::module::monomials_of_degree;
use fpcoh_core::{AlgebraError, MultiIndex, PolyRing, Polynomial, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::campaign::CampaignConfig;

/// Generators of exactly the configured degrees. Each monomial of the
/// allowed support is kept with probability `density` and given a uniform
/// nonzero coefficient; draws without a top-degree term are repeated.
///
/// Trial `index` reads its own ChaCha stream of `seed`, so instances do not
/// depend on evaluation order.
pub fn random_instance(cfg: &CampaignConfig, index: usize) -> Result<Vec<Polynomial>> {
    let ring = cfg.ring()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    cfg.degrees
        .iter()
        .map(|&d| random_polynomial(&mut rng, ring, d, cfg.homogeneous, cfg.density))
        .collect()
}

fn random_polynomial(rng: &mut ChaCha8Rng, ring: PolyRing, d: u32, homogeneous: bool, density: f64) -> Result<Polynomial> {
    if d == 0 {
        return Err(AlgebraError::InvalidRing("generator degrees must be at least 1"));
    }
    let top = monomials_of_degree(ring.n(), d);
    let lower: Vec<MultiIndex> = if homogeneous {
        Vec::new()
    } else {
        (0..d).flat_map(|k| monomials_of_degree(ring.n(), k)).collect()
    };
    let p = ring.p();
    loop {
        let mut terms = Vec::new();
        for m in &top {
            if rng.gen_bool(density) {
                terms.push((m.clone(), ring.elem(rng.gen_range(1..p) as i64)));
            }
        }
        if terms.is_empty() {
            continue;
        }
        for m in &lower {
            if rng.gen_bool(density) {
                terms.push((m.clone(), ring.elem(rng.gen_range(1..p) as i64)));
            }
        }
        return Ok(Polynomial::from_terms(ring, terms));
    }
}
