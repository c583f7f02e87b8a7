use super::{SweepConfig, CONJECTURE_SOFT_CAP};
use crate::identities::*;
use crate::partitions::{enumerate, Partition};
use crate::polyalg::{theorem9_lhs, theorem9_rhs, Canonical};
use crate::{Error, Result};

type GridFn = dyn Fn(&SweepConfig) -> Vec<Vec<i64>> + Send + Sync;
type CheckFn = dyn Fn(&SweepConfig, &[i64]) -> Result<Sides<String>> + Send + Sync;
type ValidateFn = dyn Fn(&SweepConfig) -> Result<()> + Send + Sync;

/// A verifier exposed to the sweep runner: its parameter names, the grid it
/// is swept over, and a check returning both sides in canonical form.
pub struct Identity {
    id: &'static str,
    anchor: &'static str,
    params: &'static [&'static str],
    grid: Box<GridFn>,
    check: Box<CheckFn>,
    validate: Option<Box<ValidateFn>>,
}

impl Identity {
    pub fn new(
        id: &'static str,
        anchor: &'static str,
        params: &'static [&'static str],
        grid: impl Fn(&SweepConfig) -> Vec<Vec<i64>> + Send + Sync + 'static,
        check: impl Fn(&SweepConfig, &[i64]) -> Result<Sides<String>> + Send + Sync + 'static,
    ) -> Self {
        Self {
            id,
            anchor,
            params,
            grid: Box::new(grid),
            check: Box::new(check),
            validate: None,
        }
    }

    /// Extra configuration check run before the sweep starts.
    pub fn with_validation(mut self, f: impl Fn(&SweepConfig) -> Result<()> + Send + Sync + 'static) -> Self {
        self.validate = Some(Box::new(f));
        self
    }

    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn anchor(&self) -> &'static str {
        self.anchor
    }

    pub fn params(&self) -> &'static [&'static str] {
        self.params
    }

    pub fn grid(&self, config: &SweepConfig) -> Vec<Vec<i64>> {
        (self.grid)(config)
    }

    pub fn check(&self, config: &SweepConfig, params: &[i64]) -> Result<Sides<String>> {
        (self.check)(config, params)
    }

    pub(crate) fn validate(&self, config: &SweepConfig) -> Result<()> {
        self.validate.as_ref().map_or(Ok(()), |f| f(config))
    }
}

#[derive(Default)]
pub struct Registry {
    entries: Vec<Identity>,
}

impl Registry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds an identity, replacing any previous one with the same id.
    pub fn register(&mut self, identity: Identity) {
        self.entries.retain(|e| e.id != identity.id);
        self.entries.push(identity);
    }

    pub fn get(&self, id: &str) -> Option<&Identity> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Identity> {
        self.entries.iter()
    }

    /// Every verifier shipped with the crate.
    pub fn standard() -> Self {
        let mut r = Self::new();
        for identity in standard_identities() {
            r.register(identity);
        }
        r
    }
}

fn range(lo: usize, hi: usize) -> impl Iterator<Item = i64> + Clone {
    (lo as i64)..=(hi as i64)
}

fn grid1(lo: usize, hi: usize) -> Vec<Vec<i64>> {
    range(lo, hi).map(|n| vec![n]).collect()
}

/// `(n, r)` with `1 ≤ n ≤ n_max`, `1 ≤ r ≤ r_max`.
fn grid_nr(c: &SweepConfig) -> Vec<Vec<i64>> {
    range(1, c.n_max)
        .flat_map(|n| range(1, c.r_max).map(move |r| vec![n, r]))
        .collect()
}

fn grid_nrs(c: &SweepConfig) -> Vec<Vec<i64>> {
    let s_max = c.s_max;
    grid_nr(c)
        .into_iter()
        .flat_map(|nr| range(1, s_max).map(move |s| [nr.clone(), vec![s]].concat()))
        .collect()
}

/// Appends `p` with `1 ≤ p ≤ r`, `r` being entry 1.
fn with_p(grid: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    grid.into_iter()
        .flat_map(|t| (1..=t[1]).map(move |p| [t.clone(), vec![p]].concat()))
        .collect()
}

fn grid_ns(c: &SweepConfig) -> Vec<Vec<i64>> {
    let s_max = c.s_max;
    range(1, c.n_max).flat_map(|n| range(1, s_max).map(move |s| vec![n, s])).collect()
}

fn u(v: i64) -> usize {
    v as usize
}

fn canon<T: Canonical>(sides: Result<Sides<T>>) -> Result<Sides<String>> {
    sides.map(|s| s.canonical())
}

/// `λ:value` entries over all partitions of `n`.
fn listing(n: usize, mut value: impl FnMut(&Partition) -> Result<String>) -> Result<String> {
    let items: Result<Vec<String>> = enumerate(n).iter().map(|mu| Ok(format!("{mu}:{}", value(mu)?))).collect();
    Ok(items?.join(" "))
}

fn conjecture_caps(c: &SweepConfig) -> Result<()> {
    if !c.allow_large && (c.n_max > CONJECTURE_SOFT_CAP || c.umax > CONJECTURE_SOFT_CAP) {
        return Err(Error::InvalidParameter(format!(
            "conjecture sweeps above n-max {CONJECTURE_SOFT_CAP} or umax {CONJECTURE_SOFT_CAP} need --allow-large"
        )));
    }
    Ok(())
}

fn standard_identities() -> Vec<Identity> {
    vec![
        Identity::new(
            "genbinom",
            "<λ,r> from the generating polynomial against subset enumeration",
            &["n", "r"],
            |c| {
                range(1, c.n_max)
                    .flat_map(|n| range(1, c.r_max.min(n as usize)).map(move |r| vec![n, r]))
                    .collect()
            },
            |c, p| {
                let (n, r) = (u(p[0]), u(p[1]));
                let lhs = listing(n, |mu| Ok(gen_binom(mu, r).to_string()))?;
                let rhs = listing(n, |mu| Ok(gen_binom_oracle(mu, r, c.oracle_cap)?.to_string()))?;
                Ok(Sides::new(lhs, rhs))
            },
        )
        .with_validation(|c| {
            if c.n_max > c.oracle_cap {
                return Err(Error::InvalidParameter(format!(
                    "n-max {} exceeds the oracle cap {}",
                    c.n_max, c.oracle_cap
                )));
            }
            Ok(())
        }),
        Identity::new(
            "recurrence",
            "<λ ∪ {i}, r> = Σ_j C(i,j) <λ, r-j>, over all λ of weight n",
            &["n", "i", "r"],
            |c| {
                let s_max = c.s_max;
                range(0, c.n_max)
                    .flat_map(|n| range(1, s_max).flat_map(move |i| (0..=n + i).map(move |r| vec![n, i, r])))
                    .collect()
            },
            |_, p| {
                let (n, i, r) = (u(p[0]), u(p[1]), u(p[2]));
                let lhs = listing(n, |l| Ok(recurrence_sides(l, i, r).lhs.to_string()))?;
                let rhs = listing(n, |l| Ok(recurrence_sides(l, i, r).rhs.to_string()))?;
                Ok(Sides::new(lhs, rhs))
            },
        ),
        Identity::new(
            "lengthrel",
            "<μ, l(μ)> = ∏ μ_i and <μ, l(μ)+1> = (|μ|-l(μ)) ∏ μ_i / 2",
            &["n", "offset"],
            |c| range(1, c.n_max).flat_map(|n| [vec![n, 0], vec![n, 1]]).collect(),
            |_, p| {
                let (n, offset) = (u(p[0]), u(p[1]));
                let lhs = listing(n, |mu| Ok(length_relation_sides(mu, offset)?.lhs.to_string()))?;
                let rhs = listing(n, |mu| Ok(length_relation_sides(mu, offset)?.rhs.to_string()))?;
                Ok(Sides::new(lhs, rhs))
            },
        ),
        Identity::new(
            "classical",
            "Σ (-1)^{n-l(μ)} X^{l(μ)}/z_μ = C(X, n)",
            &["n"],
            |c| grid1(1, c.n_max),
            |_, p| canon(classical_sides(u(p[0]))),
        ),
        Identity::new(
            "classical-alt",
            "Σ X^{l(μ)}/z_μ = C(X+n-1, n)",
            &["n"],
            |c| grid1(1, c.n_max),
            |_, p| canon(classical_alt_sides(u(p[0]))),
        ),
        Identity::new(
            "thm1",
            "signed <μ,r>-weighted rising factorial sums, polynomial in X",
            &["n", "r", "s"],
            grid_nrs,
            |_, p| canon(thm1_sides(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm1alt",
            "unsigned <μ,r>-weighted rising factorial sums, polynomial in X",
            &["n", "r", "s"],
            grid_nrs,
            |_, p| canon(thm1_alt_sides(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm2",
            "rising factorial sums over partitions of fixed length p, via |s(r,j)|",
            &["n", "r", "s", "p"],
            |c| with_p(grid_nrs(c)),
            |_, p| canon(thm2_sides(u(p[0]), u(p[1]), u(p[2]), u(p[3]))),
        ),
        Identity::new(
            "eq2",
            "Σ (-1)^{r-l(μ)} <μ,r>/z_μ X^{l(μ)} = C(n-1,r-1) C(X,r)",
            &["n", "r"],
            grid_nr,
            |_, p| canon(eq2_sides(u(p[0]), u(p[1]))),
        ),
        Identity::new(
            "eq3",
            "r! Σ_{l(μ)=p} <μ,r>/z_μ = C(n-1,r-1) |s(r,p)|",
            &["n", "r", "p"],
            |c| with_p(grid_nr(c)),
            |_, p| canon(eq3_sides(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm3",
            "rising factorial sums over partitions of length r, weighted by 1/∏ m_i!",
            &["n", "r", "s"],
            grid_nrs,
            |_, p| canon(thm3_sides(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm4",
            "signed rising factorial sums weighted by 1/z_μ, polynomial in X",
            &["n", "s"],
            grid_ns,
            |_, p| canon(thm4_sides(u(p[0]), u(p[1]))),
        ),
        Identity::new(
            "thm4alt",
            "unsigned rising factorial sums weighted by 1/z_μ, polynomial in X",
            &["n", "s"],
            grid_ns,
            |_, p| canon(thm4_alt_sides(u(p[0]), u(p[1]))),
        ),
        Identity::new(
            "thm5",
            "part-size marker Σ m_i(μ) z^{i-1} weighted by X^{l(μ)-1}/z_μ",
            &["n"],
            |c| grid1(1, c.n_max),
            |_, p| canon(thm5_sides(u(p[0]))),
        ),
        Identity::new(
            "thm7",
            "part-size marker weighted by signed <μ,r>/z_μ X^{l(μ)-1}",
            &["n", "r"],
            grid_nr,
            |_, p| canon(thm7_sides(u(p[0]), u(p[1]))),
        ),
        Identity::new(
            "thm7ones",
            "the z-marked identity with z^k replaced by C(k+s, k)",
            &["n", "r", "s"],
            grid_nrs,
            |_, p| canon(thm7_at_ones(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm8",
            "X^{p-1} coefficient of the z-marked identity",
            &["n", "r", "p"],
            |c| with_p(grid_nr(c)),
            |_, p| canon(thm8_sides(u(p[0]), u(p[1]), u(p[2]))),
        ),
        Identity::new(
            "thm9",
            "exponential generating series in x, y, q truncated at y^cap, q^cap",
            &["cap"],
            |c| grid1(1, c.n_max),
            |_, p| {
                let cap = p[0] as u32;
                Ok(Sides::new(theorem9_lhs(cap, cap), theorem9_rhs(cap, cap)).canonical())
            },
        ),
        Identity::new(
            "lemma",
            "C(a+b-1, d-c) C(b+c-1, c-1) as a sum over c ≤ i ≤ d",
            &["a", "b", "c", "d"],
            |c| {
                let mut grid = Vec::new();
                for a in range(0, c.n_max) {
                    for b in range(1, c.n_max) {
                        for cc in 0..=a {
                            for d in cc..=a {
                                grid.push(vec![a, b, cc, d]);
                            }
                        }
                    }
                }
                grid
            },
            |_, p| Ok(lemma_sides(p[0], p[1], p[2], p[3]).canonical()),
        ),
        Identity::new(
            "hconv",
            "h_n(1^{X+Y}) = Σ_i h_{n-i}(1^X) h_i(1^Y)",
            &["n"],
            |c| grid1(0, c.n_max),
            |_, p| Ok(h_convolution_sides(u(p[0])).canonical()),
        ),
        Identity::new(
            "hrel",
            "h_i(1^k)/k = h_{i-1}(1^{k+1})/i",
            &["i", "k"],
            |c| range(1, c.n_max).flat_map(|i| range(1, c.n_max).map(move |k| vec![i, k])).collect(),
            |_, p| canon(h_relation_sides(u(p[0]), u(p[1]))),
        ),
        Identity::new(
            "chuvdm",
            "C(X+Y, n) = Σ_i C(X, n-i) C(Y, i)",
            &["n"],
            |c| grid1(0, c.n_max),
            |_, p| Ok(chu_vandermonde_sides(u(p[0])).canonical()),
        ),
        Identity::new(
            "conj1",
            "u-expansion of the partition product, r = n, truncated at u^umax",
            &["n", "umax"],
            |c| range(1, c.n_max).map(|n| vec![n, c.umax as i64]).collect(),
            |_, p| canon(conj1_sides(u(p[0]), u(p[1]))),
        )
        .with_validation(conjecture_caps),
        Identity::new(
            "conj2",
            "u-expansion of the <μ,r>-weighted partition product, truncated at u^umax",
            &["n", "r", "umax"],
            |c| grid_nr(c).into_iter().map(|t| vec![t[0], t[1], c.umax as i64]).collect(),
            |_, p| canon(conj2_sides(u(p[0]), u(p[1]), u(p[2]))),
        )
        .with_validation(conjecture_caps),
    ]
}
