//! Axiom checks on structure constants and a mutation harness.

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::HopfData;
use crate::field::FieldElem;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultiplicationMultiplicative,
    ComultiplicationUnital,
    CounitMultiplicative,
    CounitUnital,
    Antipode,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub violations: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BialgebraReport {
    pub laws: Vec<LawReport>,
    pub good_basis: bool,
}

impl BialgebraReport {
    fn passes(&self, laws: &[Law]) -> bool {
        self.laws.iter().filter(|r| laws.contains(&r.law)).all(|r| r.violations.is_empty())
    }

    pub fn assoc(&self) -> bool {
        self.passes(&[Law::Associativity])
    }

    pub fn coassoc(&self) -> bool {
        self.passes(&[Law::Coassociativity])
    }

    pub fn counit_law(&self) -> bool {
        self.passes(&[Law::Counit])
    }

    pub fn unit_law(&self) -> bool {
        self.passes(&[Law::Unit])
    }

    pub fn compatibility(&self) -> bool {
        self.passes(&[
            Law::ComultiplicationMultiplicative,
            Law::ComultiplicationUnital,
            Law::CounitMultiplicative,
            Law::CounitUnital,
        ])
    }

    pub fn antipode(&self) -> bool {
        self.passes(&[Law::Antipode])
    }

    pub fn all_pass(&self) -> bool {
        self.laws.iter().all(|r| r.violations.is_empty())
    }

    pub fn violations(&self) -> impl Iterator<Item = (Law, &[usize])> {
        self.laws.iter().flat_map(|r| r.violations.iter().map(move |v| (r.law, v.as_slice())))
    }
}

type Sparse = Vec<Vec<(usize, usize, FieldElem)>>;

/// `by_last[l]` lists `(i, j, c)` with `t[i][j][l] = c ≠ 0`.
fn by_last(t: &super::Tensor3) -> Sparse {
    let mut out = vec![Vec::new(); t.dim()];
    for (i, j, l, c) in t.nonzero() {
        out[l].push((i, j, c));
    }
    out
}

/// `pairs[i][j]` lists `(l, c)` with `t[i][j][l] = c ≠ 0`.
fn by_pair(t: &super::Tensor3) -> Vec<Vec<Vec<(usize, FieldElem)>>> {
    let e = t.dim();
    let mut out = vec![vec![Vec::new(); e]; e];
    for (i, j, l, c) in t.nonzero() {
        out[i][j].push((l, c));
    }
    out
}

pub fn verify_bialgebra(h: &HopfData) -> BialgebraReport {
    let e = h.dim();
    let f = h.field();
    let zero = f.zero();
    let delta = |a: usize, b: usize| if a == b { f.one() } else { f.zero() };
    let mp = by_pair(h.mult());
    let cl = by_last(h.comult());
    let (u, pi) = (h.unit(), h.counit());
    let mut laws = Vec::new();

    let mut v = Vec::new();
    for i in 0..e {
        for j in 0..e {
            for k in 0..e {
                let mut lhs = vec![zero.clone(); e];
                for (l, a) in &mp[i][j] {
                    for (t, b) in &mp[*l][k] {
                        lhs[*t] = &lhs[*t] + &(a * b);
                    }
                }
                let mut rhs = vec![zero.clone(); e];
                for (l, a) in &mp[j][k] {
                    for (t, b) in &mp[i][*l] {
                        rhs[*t] = &rhs[*t] + &(a * b);
                    }
                }
                for t in 0..e {
                    if lhs[t] != rhs[t] {
                        v.push(vec![i, j, k, t]);
                    }
                }
            }
        }
    }
    laws.push(LawReport { law: Law::Associativity, violations: v });

    let mut v = Vec::new();
    for j in 0..e {
        let mut left = vec![zero.clone(); e];
        let mut right = vec![zero.clone(); e];
        for i in 0..e {
            for (l, c) in &mp[i][j] {
                left[*l] = &left[*l] + &(&u[i] * c);
            }
            for (l, c) in &mp[j][i] {
                right[*l] = &right[*l] + &(&u[i] * c);
            }
        }
        for l in 0..e {
            if left[l] != delta(j, l) || right[l] != delta(j, l) {
                v.push(vec![j, l]);
            }
        }
    }
    laws.push(LawReport { law: Law::Unit, violations: v });

    // (μ⊗id)μ(b_t) and (id⊗μ)μ(b_t) as e³ coefficient arrays
    let mut v = Vec::new();
    for t in 0..e {
        let mut lhs = vec![zero.clone(); e * e * e];
        for (l, k, a) in &cl[t] {
            for (i, j, b) in &cl[*l] {
                let idx = (i * e + j) * e + k;
                lhs[idx] = &lhs[idx] + &(a * b);
            }
        }
        let mut rhs = vec![zero.clone(); e * e * e];
        for (i, l, a) in &cl[t] {
            for (j, k, b) in &cl[*l] {
                let idx = (i * e + j) * e + k;
                rhs[idx] = &rhs[idx] + &(a * b);
            }
        }
        for idx in 0..e * e * e {
            if lhs[idx] != rhs[idx] {
                v.push(vec![idx / (e * e), (idx / e) % e, idx % e, t]);
            }
        }
    }
    laws.push(LawReport { law: Law::Coassociativity, violations: v });

    let mut v = Vec::new();
    for l in 0..e {
        let mut left = vec![zero.clone(); e];
        let mut right = vec![zero.clone(); e];
        for (i, j, c) in &cl[l] {
            left[*j] = &left[*j] + &(&pi[*i] * c);
            right[*i] = &right[*i] + &(&pi[*j] * c);
        }
        for j in 0..e {
            if left[j] != delta(j, l) || right[j] != delta(j, l) {
                v.push(vec![j, l]);
            }
        }
    }
    laws.push(LawReport { law: Law::Counit, violations: v });

    let mut v = Vec::new();
    for x in 0..e {
        for y in 0..e {
            let mut lhs = vec![zero.clone(); e * e];
            for (l, m) in &mp[x][y] {
                for (a, b, c) in &cl[*l] {
                    lhs[a * e + b] = &lhs[a * e + b] + &(m * c);
                }
            }
            let mut rhs = vec![zero.clone(); e * e];
            for (i, j, c1) in &cl[x] {
                for (k, l, c2) in &cl[y] {
                    let c = c1 * c2;
                    for (a, m1) in &mp[*i][*k] {
                        for (b, m2) in &mp[*j][*l] {
                            rhs[a * e + b] = &rhs[a * e + b] + &(&c * &(m1 * m2));
                        }
                    }
                }
            }
            for idx in 0..e * e {
                if lhs[idx] != rhs[idx] {
                    v.push(vec![x, y, idx / e, idx % e]);
                }
            }
        }
    }
    laws.push(LawReport { law: Law::ComultiplicationMultiplicative, violations: v });

    let mut v = Vec::new();
    let mut mu1 = vec![zero.clone(); e * e];
    for l in 0..e {
        for (a, b, c) in &cl[l] {
            mu1[a * e + b] = &mu1[a * e + b] + &(&u[l] * c);
        }
    }
    for a in 0..e {
        for b in 0..e {
            if mu1[a * e + b] != &u[a] * &u[b] {
                v.push(vec![a, b]);
            }
        }
    }
    laws.push(LawReport { law: Law::ComultiplicationUnital, violations: v });

    let mut v = Vec::new();
    for x in 0..e {
        for y in 0..e {
            let lhs = mp[x][y].iter().fold(zero.clone(), |acc, (l, m)| &acc + &(m * &pi[*l]));
            if lhs != &pi[x] * &pi[y] {
                v.push(vec![x, y]);
            }
        }
    }
    laws.push(LawReport { law: Law::CounitMultiplicative, violations: v });

    let pu = u.iter().zip(pi).fold(zero.clone(), |acc, (a, b)| &acc + &(a * b));
    let v = if pu.is_one() { Vec::new() } else { vec![vec![]] };
    laws.push(LawReport { law: Law::CounitUnital, violations: v });

    if let Some(s) = h.antipode() {
        // m(S⊗id)μ(b_l) and m(id⊗S)μ(b_l) against π(b_l)·1_H
        let mut v = Vec::new();
        for l in 0..e {
            let mut left = vec![zero.clone(); e];
            let mut right = vec![zero.clone(); e];
            for (i, j, c) in &cl[l] {
                for k in 0..e {
                    let sk = &s[(k, *i)];
                    if !sk.is_zero() {
                        for (t, m) in &mp[k][*j] {
                            left[*t] = &left[*t] + &(&(c * sk) * m);
                        }
                    }
                    let sk = &s[(k, *j)];
                    if !sk.is_zero() {
                        for (t, m) in &mp[*i][k] {
                            right[*t] = &right[*t] + &(&(c * sk) * m);
                        }
                    }
                }
            }
            for t in 0..e {
                let target = &pi[l] * &u[t];
                if left[t] != target || right[t] != target {
                    v.push(vec![l, t]);
                }
            }
        }
        laws.push(LawReport { law: Law::Antipode, violations: v });
    }

    BialgebraReport { laws, good_basis: h.is_good_basis() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tensor {
    Mult,
    Comult,
    Counit,
    Unit,
}

/// One structure constant increased by one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Mutation {
    pub tensor: Tensor,
    pub index: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MutationSurvey {
    pub sampled: usize,
    pub detected: usize,
    /// Mutations that still satisfy every axiom and admit an antipode.
    pub degenerate: Vec<Mutation>,
}

impl MutationSurvey {
    pub fn detection_rate(&self) -> f64 {
        if self.sampled == 0 {
            1.0
        } else {
            self.detected as f64 / self.sampled as f64
        }
    }
}

impl Mutation {
    pub fn apply(&self, h: &HopfData) -> HopfData {
        let mut out = h.clone();
        let one = h.field().one();
        let slot = match (self.tensor, self.index.as_slice()) {
            (Tensor::Mult, [i, j, l]) => out.mult_mut().get_mut(*i, *j, *l),
            (Tensor::Comult, [i, j, l]) => out.comult_mut().get_mut(*i, *j, *l),
            (Tensor::Counit, [i]) => &mut out.counit_mut()[*i],
            (Tensor::Unit, [i]) => &mut out.unit_mut()[*i],
            _ => panic!("mutation index does not match its tensor"),
        };
        *slot = &*slot + &one;
        out
    }
}

/// Applies `samples` distinct single-entry mutations chosen by a seeded RNG
/// and counts how many break an axiom or the existence of an antipode.
pub fn mutation_survey(h: &HopfData, samples: usize, seed: u64) -> MutationSurvey {
    let e = h.dim();
    let cube = e * e * e;
    let total = 2 * cube + 2 * e;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks = sample(&mut rng, total, samples.min(total));
    let mut survey = MutationSurvey { sampled: 0, detected: 0, degenerate: Vec::new() };
    for k in picks.iter() {
        let triple = |x: usize| vec![x / (e * e), (x / e) % e, x % e];
        let m = if k < cube {
            Mutation { tensor: Tensor::Mult, index: triple(k) }
        } else if k < 2 * cube {
            Mutation { tensor: Tensor::Comult, index: triple(k - cube) }
        } else if k < 2 * cube + e {
            Mutation { tensor: Tensor::Counit, index: vec![k - 2 * cube] }
        } else {
            Mutation { tensor: Tensor::Unit, index: vec![k - 2 * cube - e] }
        };
        let mutated = m.apply(h);
        survey.sampled += 1;
        if !verify_bialgebra(&mutated).all_pass() || mutated.solve_antipode().is_err() {
            survey.detected += 1;
        } else {
            survey.degenerate.push(m);
        }
    }
    survey
}
