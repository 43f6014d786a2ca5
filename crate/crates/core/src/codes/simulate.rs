use super::{decode, Code, DecodeResult};
use crate::error::{Error, Result};
use crate::gf::Elem;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ChannelStats {
    pub trials: u64,
    /// Trials whose decoder output differs from the sent codeword.
    pub block_errors: u64,
    pub failures: u64,
    pub miscorrections: u64,
}

impl ChannelStats {
    pub fn block_error_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.block_errors as f64 / self.trials as f64
        }
    }

    pub fn failure_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.failures as f64 / self.trials as f64
        }
    }
}

/// Sends random codewords through the `q`-ary symmetric channel with symbol
/// error probability `p` and decodes. Trial `i` draws from a ChaCha8 stream
/// `i` keyed by `seed`, so results do not depend on scheduling.
pub fn simulate_channel(code: &Code, p: f64, trials: u64, seed: u64) -> Result<ChannelStats> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::InvalidParameters(format!("symbol error probability {p} not in [0, 1)")));
    }
    let ctx = code.field();
    let q = code.variety().q();
    let elems = ctx.elements(q)?;
    let basis = code.kernel_basis();
    let n = code.n();
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let mut sent = vec![Elem::ZERO; n];
            for b in basis {
                let c = elems[rng.gen_range(0..elems.len())];
                crate::pglin::axpy(ctx, &mut sent, c, b);
            }
            let received: Vec<Elem> = sent
                .iter()
                .map(|&x| {
                    if rng.gen_bool(p) {
                        ctx.add(x, elems[rng.gen_range(1..elems.len())])
                    } else {
                        x
                    }
                })
                .collect();
            decode(code, &received).map(|d| match d {
                DecodeResult::Corrected { codeword, .. } if codeword == sent => (0, 0, 0),
                DecodeResult::Corrected { .. } => (1, 0, 1),
                DecodeResult::Failure => (1, 1, 0),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(outcomes.into_iter().fold(ChannelStats { trials, ..Default::default() }, |mut s, (b, f, m)| {
        s.block_errors += b;
        s.failures += f;
        s.miscorrections += m;
        s
    }))
}
