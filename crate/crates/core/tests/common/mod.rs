#![allow(dead_code)]

use dialg::algebra::{mono_mul, q, CWord, DiMonomial, DiPoly, Marker, Op, Var};
use dialg::assoc::{ADiMonomial, ADiPoly};
use dialg::presentation::Presentation;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn m(ix: &[u32], marker: u8) -> DiMonomial {
    DiMonomial::of(ix, marker)
}

pub fn p(terms: &[(i64, &[u32], u8)]) -> DiPoly {
    DiPoly::from_terms(terms.iter().map(|(c, ix, mk)| (m(ix, *mk), q(*c))))
}

pub fn example_a_generator() -> DiPoly {
    p(&[(1, &[0, 0], 2), (-1, &[1], 1)])
}

pub fn example_a_basis() -> Vec<DiPoly> {
    vec![
        p(&[(1, &[0, 0], 2), (-1, &[1], 1)]),
        p(&[(1, &[0, 1], 2), (-1, &[0, 1], 1)]),
        p(&[(1, &[1, 1], 2), (-1, &[1, 1], 1)]),
    ]
}

pub fn random_coeff(rng: &mut TestRng) -> i64 {
    loop {
        let c = rng.gen_range(-5..=5);
        if c != 0 {
            return c;
        }
    }
}

pub fn random_monomial(rng: &mut TestRng, n: u32, max_deg: usize) -> DiMonomial {
    let deg = rng.gen_range(1..=max_deg);
    let letters: Vec<Var> = (0..deg).map(|_| Var(rng.gen_range(0..n))).collect();
    let marker = if deg == 2 && rng.gen_bool(0.5) {
        Marker::Two
    } else {
        Marker::One
    };
    DiMonomial::new(CWord::new(letters), marker).unwrap()
}

/// One to `max_terms` terms with coefficients in [-5, 5]; may cancel to zero.
pub fn random_poly(rng: &mut TestRng, n: u32, max_deg: usize, max_terms: usize) -> DiPoly {
    let terms = rng.gen_range(1..=max_terms);
    let mut f = DiPoly::zero();
    for _ in 0..terms {
        let c = random_coeff(rng);
        f.add_term(random_monomial(rng, n, max_deg), q(c));
    }
    f
}

pub fn random_nonzero_poly(rng: &mut TestRng, n: u32, max_deg: usize, max_terms: usize) -> DiPoly {
    loop {
        let f = random_poly(rng, n, max_deg, max_terms);
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_amonomial(rng: &mut TestRng, n: u32, max_deg: usize) -> ADiMonomial {
    let deg = rng.gen_range(1..=max_deg);
    let letters: Vec<Var> = (0..deg).map(|_| Var(rng.gen_range(0..n))).collect();
    let dot = rng.gen_range(1..=deg);
    ADiMonomial::new(letters, dot).unwrap()
}

pub fn random_apoly(rng: &mut TestRng, n: u32, max_deg: usize, max_terms: usize) -> ADiPoly {
    let terms = rng.gen_range(1..=max_terms);
    let mut f = ADiPoly::zero();
    for _ in 0..terms {
        let c = random_coeff(rng);
        f.add_term(random_amonomial(rng, n, max_deg), q(c));
    }
    f
}

/// A finitely generated ideal: presentation and generators.
#[derive(Debug, Clone)]
pub struct Ideal {
    pub name: String,
    pub presentation: Presentation,
    pub generators: Vec<DiPoly>,
}

/// One to three nonzero generators of degree at most three over one to
/// three variables.
pub fn random_ideal(rng: &mut TestRng, name: String) -> Ideal {
    let n = rng.gen_range(1..=3u32);
    let count = rng.gen_range(1..=3);
    let generators = (0..count)
        .map(|_| random_nonzero_poly(rng, n, 3, 3))
        .collect();
    Ideal {
        name,
        presentation: Presentation::standard(n as usize),
        generators,
    }
}

/// Example A followed by twenty seeded random ideals.
pub fn fixed_suite() -> Vec<Ideal> {
    let mut rng = rng(0x5eed_0001);
    let mut out = vec![Ideal {
        name: "example-a".into(),
        presentation: Presentation::standard(2),
        generators: vec![example_a_generator()],
    }];
    for i in 0..20 {
        out.push(random_ideal(&mut rng, format!("random-{i}")));
    }
    out
}

/// A random element of `Id(gens)`: a sum of scaled generators, each
/// optionally multiplied by a random monomial on a random side, with the
/// result kept within `max_deg`.
pub fn random_ideal_element(rng: &mut TestRng, n: u32, gens: &[DiPoly], max_deg: usize) -> DiPoly {
    let mut out = DiPoly::zero();
    let pieces = rng.gen_range(1..=3);
    for _ in 0..pieces {
        let g = gens.choose(rng).expect("nonempty generators");
        let room = max_deg.saturating_sub(g.degree());
        let c = q(random_coeff(rng));
        let term = if room == 0 || rng.gen_bool(0.25) {
            g.clone()
        } else {
            let u = random_monomial(rng, n, room);
            let op = if rng.gen_bool(0.5) { Op::Dashv } else { Op::Vdash };
            let um = DiPoly::monomial(u);
            if rng.gen_bool(0.5) {
                g.mul(&um, op)
            } else {
                um.mul(g, op)
            }
        };
        out.add_scaled(&term, &c);
    }
    out
}

/// Multiplies two monomials through the public product, for rewriting walks.
pub fn mul(a: &DiMonomial, b: &DiMonomial, op: Op) -> DiMonomial {
    mono_mul(a, b, op)
}
