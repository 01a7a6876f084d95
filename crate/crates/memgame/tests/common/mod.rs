#![allow(dead_code)]

use core::f64::consts::{FRAC_PI_2, PI};

use memgame::channels::ChannelSpec;
use memgame::closedform::{Noise, Pairing};
use memgame::protocol::{EntanglementParams, StrategyParams};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub struct Sample {
    pub ent: EntanglementParams,
    pub s1: StrategyParams,
    pub s2: StrategyParams,
    pub n1: Noise,
    pub n2: Noise,
    pub a: [f64; 4],
    pub b: [f64; 4],
}

impl Sample {
    pub fn specs(&self, pairing: Pairing) -> (ChannelSpec, ChannelSpec) {
        let (k1, k2) = pairing.kinds();
        (
            ChannelSpec::new(k1, self.n1.p, self.n1.mu).unwrap(),
            ChannelSpec::new(k2, self.n2.p, self.n2.mu).unwrap(),
        )
    }
}

pub fn strategy(rng: &mut ChaCha8Rng) -> StrategyParams {
    StrategyParams::new(rng.gen_range(0.0..=PI), rng.gen_range(-PI..=PI), rng.gen_range(-PI..=PI)).unwrap()
}

pub fn sample(rng: &mut ChaCha8Rng, memoryless: bool) -> Sample {
    let ent = EntanglementParams::new(rng.gen_range(0.0..=FRAC_PI_2), rng.gen_range(0.0..=FRAC_PI_2)).unwrap();
    let s1 = strategy(rng);
    let s2 = strategy(rng);
    let mut noise = || {
        let p = rng.gen_range(0.0..=1.0);
        let mu = if memoryless { 0.0 } else { rng.gen_range(0.0..=1.0) };
        Noise::new(p, mu).unwrap()
    };
    let (n1, n2) = (noise(), noise());
    let mut entries = || core::array::from_fn(|_| rng.gen_range(-5.0..5.0));
    let (a, b) = (entries(), entries());
    Sample { ent, s1, s2, n1, n2, a, b }
}
