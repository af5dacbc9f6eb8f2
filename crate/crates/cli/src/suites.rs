//! Check suites run by `triplex verify` and the single-purpose commands.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triplex::envelope::{Element, EnvelopingAlgebra};
use triplex::freealg::DEFAULT_MAX_MONOMIALS;
use triplex::hopf::Hopf;
use triplex::lts::{
    catalog, endo_closure_dim, k_skew_basis, simplicity_certificate, standard_embedding, tau_commutator_check,
    trace_identity_check, Axiom, Simplicity, TripleSystem,
};
use triplex::{Error, Scalar, SparseVector, Subspace};

use crate::error::CliError;
use crate::report::{Record, SuiteReport};

/// Seeded samples per randomized family.
pub const SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Axioms,
    Embedding,
    Endo,
    Simple,
    Pbw,
    Jordan,
    Lemma,
    Expansion,
    S2,
    Hopf,
    Mainthm,
    All,
}

impl Suite {
    pub const ALL: [Suite; 12] = [
        Suite::Axioms,
        Suite::Embedding,
        Suite::Endo,
        Suite::Simple,
        Suite::Pbw,
        Suite::Jordan,
        Suite::Lemma,
        Suite::Expansion,
        Suite::S2,
        Suite::Hopf,
        Suite::Mainthm,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Embedding => "embedding",
            Suite::Endo => "endo",
            Suite::Simple => "simple",
            Suite::Pbw => "pbw",
            Suite::Jordan => "jordan",
            Suite::Lemma => "lemma",
            Suite::Expansion => "expansion",
            Suite::S2 => "s2",
            Suite::Hopf => "hopf",
            Suite::Mainthm => "mainthm",
            Suite::All => "all",
        }
    }

    fn needs_algebra(self) -> bool {
        !matches!(self, Suite::Axioms | Suite::Embedding | Suite::Endo | Suite::Simple)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
            CliError::Usage(format!("unknown suite {s:?}; expected one of {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub max_degree: Option<usize>,
    pub seed: u64,
    pub max_monomials: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self { max_degree: None, seed: 0, max_monomials: DEFAULT_MAX_MONOMIALS }
    }
}

/// Truncation degree used when none is given.
pub fn default_degree(dim: usize) -> usize {
    match dim {
        1 => 8,
        2 => 6,
        3 => 4,
        _ => 3,
    }
}

impl Config {
    pub fn degree_for(&self, t: &TripleSystem) -> usize {
        self.max_degree.unwrap_or_else(|| default_degree(t.dim()))
    }
}

pub fn is_s2(t: &TripleSystem) -> bool {
    t.same_constants(&catalog::s2())
}

pub fn build_algebra(t: &TripleSystem, cfg: &Config) -> Result<EnvelopingAlgebra, CliError> {
    Ok(EnvelopingAlgebra::build_with_limit(t, cfg.degree_for(t), cfg.max_monomials)?)
}

pub fn run_suite(suite: Suite, t: &TripleSystem, cfg: &Config) -> Result<SuiteReport, CliError> {
    let start = Instant::now();
    let n = cfg.degree_for(t);
    let alg = if suite.needs_algebra() { Some(build_algebra(t, cfg)?) } else { None };
    let alg = alg.as_ref();
    let records = match suite {
        Suite::All => {
            // The s2 suite only applies to S2 and the ideal statements only
            // to simple systems.
            let simple = simplicity_certificate(t)?.is_simple();
            let mut records = Vec::new();
            for s in Suite::ALL {
                if s == Suite::All || (s == Suite::S2 && !is_s2(t)) || (s == Suite::Mainthm && !simple) {
                    continue;
                }
                records.extend(run_one(s, t, alg, cfg)?);
            }
            records
        }
        s => run_one(s, t, alg, cfg)?,
    };
    let mut report = SuiteReport::new(suite.name(), t.name(), n, cfg.seed, records);
    report.elapsed = start.elapsed();
    Ok(report)
}

fn run_one(suite: Suite, t: &TripleSystem, alg: Option<&EnvelopingAlgebra>, cfg: &Config) -> Result<Vec<Record>, CliError> {
    let alg = || alg.expect("algebra is built for this suite");
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(match suite {
        Suite::Axioms => axioms(t),
        Suite::Embedding => embedding(t)?,
        Suite::Endo => endo(t)?,
        Suite::Simple => simple(t)?,
        Suite::Pbw => pbw(alg())?,
        Suite::Jordan => jordan(alg(), &mut rng)?,
        Suite::Lemma => lemma(alg())?,
        Suite::Expansion => expansion(alg())?,
        Suite::S2 => s2(alg())?,
        Suite::Hopf => hopf(alg(), &mut rng)?,
        Suite::Mainthm => mainthm(alg(), &mut rng)?,
        Suite::All => unreachable!("expanded by run_suite"),
    })
}

/// Counts checks in one family and keeps the first failure.
struct Tally {
    checked: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Self { checked: 0, failure: None }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn record(self, id: &str, identity: &str) -> Record {
        let failure = self.failure;
        Record::new(id, identity, failure.is_none()).param("checked", self.checked).witness(|| failure.unwrap_or_default())
    }
}

fn axioms(t: &TripleSystem) -> Vec<Record> {
    let report = t.check_axioms();
    [Axiom::Alternating, Axiom::Cyclic, Axiom::Derivation]
        .into_iter()
        .map(|ax| {
            let r = report.get(ax);
            Record::new(format!("axioms.{ax}"), ax.identity(), r.passed())
                .param("checked", r.checked)
                .witness(|| format!("basis indices {:?}", r.counterexample.as_deref().unwrap_or_default()))
        })
        .collect()
}

fn embedding(t: &TripleSystem) -> Result<Vec<Record>, CliError> {
    let emb = match standard_embedding(t) {
        Ok(emb) => emb,
        Err(e @ (Error::InvalidLieAlgebra(_) | Error::ClosureFailure(_) | Error::VerificationFailure(_))) => {
            let msg = e.to_string();
            return Ok(vec![Record::new("embedding.lie", "L(T) = InnDer(T) + T is a Lie algebra", false).witness(|| msg)]);
        }
        Err(e) => return Err(e.into()),
    };
    let d = t.dim();
    let mut out = vec![Record::new("embedding.lie", "L(T) = InnDer(T) + T is a Lie algebra", true)
        .param("innder_dim", emb.inner_dim())
        .param("lie_dim", emb.inner_dim() + d)
        .param("killing_nondegenerate", emb.killing_nondegenerate())];
    out.push(Record::new("embedding.sigma.bracket", "sigma[x,y] = [sigma x, sigma y]", emb.sigma_preserves_bracket()?));
    out.push(Record::new("embedding.sigma.killing", "K(sigma x, sigma y) = K(x,y)", emb.sigma_preserves_killing()?));

    let trace = trace_identity_check(t, &emb)?;
    let mismatch = trace.first_mismatch().cloned();
    out.push(
        Record::new("embedding.trace", "2 tr R_{a,b} = K(a,b)", trace.holds())
            .param("pairs", trace.values.len())
            .witness(|| {
                let (i, j, lhs, rhs) = mismatch.expect("failure has a mismatch");
                format!("(b{i}, b{j}): 2 tr R = {lhs}, K = {rhs}")
            }),
    );

    let adj = emb.r_adjointness(t)?;
    out.push(
        Record::new("embedding.adjoint", "K(R_{a,b} x, y) = K(x, R_{b,a} y)", adj.is_none())
            .witness(|| format!("(a, b) = {:?}", adj.expect("failure has a pair"))),
    );

    let mut tally = Tally::new();
    let skew = k_skew_basis(&emb)?;
    for (k, m) in skew.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                let ok = tau_commutator_check(&emb, m, &t.basis_vector(i), &t.basis_vector(j))?;
                tally.check(ok, || format!("skew map {k}, x = b{i}, y = b{j}"));
            }
        }
    }
    out.push(tally.record("embedding.tau", "[d, tau_{x,y}] = tau_{dx,y} + tau_{x,dy} for K-skew d").param("skew_dim", skew.len()));
    Ok(out)
}

fn endo(t: &TripleSystem) -> Result<Vec<Record>, CliError> {
    let d = t.dim();
    let dim = endo_closure_dim(t)?;
    let simple = simplicity_certificate(t)?.is_simple();
    let ok = (dim == d * d) == simple;
    Ok(vec![Record::new("endo.closure", "Lie closure of {R_{a,b}} = End(T) iff T is simple", ok)
        .param("closure_dim", dim)
        .param("end_dim", d * d)
        .param("simple", simple)
        .witness(|| format!("closure dimension {dim} of {}, simple = {simple}", d * d))])
}

fn simple(t: &TripleSystem) -> Result<Vec<Record>, CliError> {
    let rep = simplicity_certificate(t)?;
    let (verdict, ok, witness) = match &rep.verdict {
        Simplicity::Simple => ("simple", true, None),
        Simplicity::NotSimple { reason, witness } => {
            // A witness must be a proper nonzero ideal.
            let ok = match witness {
                Some(w) => w.dim() > 0 && w.dim() < t.dim() && is_ideal(t, w)?,
                None => !rep.nonzero_product,
            };
            ("not simple", ok, Some(reason.clone()))
        }
        Simplicity::Inconclusive => ("inconclusive", false, Some("proper envelope without an invariant subspace".into())),
    };
    let mut r = Record::new("simple.certificate", "envelope of {R_{a,b}} = End(T) and [T,T,T] != 0", ok)
        .param("verdict", verdict)
        .param("envelope_dim", rep.envelope_dim)
        .param("full_dim", rep.full_dim);
    if let Simplicity::NotSimple { witness: Some(w), .. } = &rep.verdict {
        r = r.param("ideal_dim", w.dim());
    }
    Ok(vec![r.witness(|| witness.unwrap_or_default())])
}

/// `[I, T, T]` inside `I`.
fn is_ideal(t: &TripleSystem, s: &Subspace) -> Result<bool, CliError> {
    for row in s.rows() {
        let x = row.to_dense();
        for a in 0..t.dim() {
            for b in 0..t.dim() {
                let y = t.triple_product(&x, &t.basis_vector(a), &t.basis_vector(b))?;
                if !s.member(&SparseVector::from_dense(&y))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

fn pbw(alg: &EnvelopingAlgebra) -> Result<Vec<Record>, CliError> {
    let d = alg.dim();
    let mut out = Vec::new();
    for (n, &found) in alg.quotient_dims().iter().enumerate() {
        let expected = binomial(d + n - 1, n);
        out.push(
            Record::new(format!("pbw.degree.{n}"), "dim U(T)_n / U(T)_(n-1) = C(d+n-1, n)", found == expected)
                .param("n", n)
                .param("expected", expected)
                .param("found", found),
        );
    }
    out.push(
        Record::new("pbw.total", "dim U(T)_N = C(d+N, N)", alg.nf_count() == binomial(d + alg.max_degree(), d))
            .param("dim", alg.nf_count())
            .param("relations", alg.relation_dim()),
    );
    if alg.max_degree() >= 2 {
        let mut tally = Tally::new();
        for a in 0..d {
            for b in 0..d {
                tally.check(alg.filtration_preservation_check(a, b)?, || format!("R_{{b{a},b{b}}}"));
            }
        }
        out.push(tally.record("pbw.filtration", "R_{a,b} U(T)_k in U(T)_k"));
    }
    Ok(out)
}

fn monomials(alg: &EnvelopingAlgebra, max_deg: usize) -> Vec<usize> {
    alg.up_to_degree(max_deg).collect()
}

fn jordan(alg: &EnvelopingAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    let d = alg.dim();
    let need = |k: usize| {
        if n < k {
            Err(CliError::Core(Error::DegreeBudgetExceeded { needed: k, cap: n }))
        } else {
            Ok(())
        }
    };
    need(3)?;
    let fmt_basis = |i: usize| alg.format_basis(i);
    let mut out = Vec::new();

    let mut tally = Tally::new();
    for a in 0..d {
        for x in monomials(alg, n - 1) {
            tally.check(alg.check_jordan(a, &Element::basis(x))?, || format!("a = b{a}, x = {}", fmt_basis(x)));
        }
    }
    out.push(tally.record("jordan.operator", "L_(ax+xa) = L_a L_x + L_x L_a"));

    let mut tally = Tally::new();
    for _ in 0..SAMPLES {
        let x = random_element(alg, rng, 0, n - 1, false);
        let a = rng.gen_range(0..d);
        tally.check(alg.check_jordan(a, &x)?, || format!("a = b{a}, x = {}", alg.format(&x)));
    }
    out.push(tally.record("jordan.operator.random", "L_(ax+xa) = L_a L_x + L_x L_a"));

    let mut tally = Tally::new();
    let mono = monomials(alg, n - 2);
    for a in 0..d {
        for b in 0..d {
            for &x in &mono {
                for &y in &mono {
                    if alg.nf_degree(x) + alg.nf_degree(y) + 2 > n {
                        continue;
                    }
                    let ok = alg.check_d_derivation(a, b, &Element::basis(x), &Element::basis(y))?;
                    tally.check(ok, || format!("a = b{a}, b = b{b}, x = {}, y = {}", fmt_basis(x), fmt_basis(y)));
                }
            }
        }
    }
    out.push(tally.record("jordan.derivation", "D(xy) = D(x)y + xD(y), D = [L_a, L_b], D|_T = [a,b,-]"));

    out.push(Record::new("jordan.coherence", "[a,b,c] = -2(a,b,c) = a(bc) - b(ac)", alg.check_triple_coherence()?));
    out.push(Record::new("jordan.commuting", "b_i b_j = b_j b_i", alg.check_commuting_generators()?));

    let mut tally = Tally::new();
    let mono = monomials(alg, n - 1);
    for a in 0..d {
        for &x in &mono {
            for &y in &mono {
                if alg.nf_degree(x) + alg.nf_degree(y) + 1 > n {
                    continue;
                }
                let ok = alg.check_nucleus(a, &Element::basis(x), &Element::basis(y))?;
                tally.check(ok, || format!("a = b{a}, x = {}, y = {}", fmt_basis(x), fmt_basis(y)));
            }
        }
    }
    out.push(tally.record("jordan.nucleus", "(a,x,y) + (x,a,y) = 0"));

    let mut tally = Tally::new();
    for c in 0..d {
        for i in 1..n {
            for j in 1..=n - i {
                for x in monomials(alg, n - i - j) {
                    let ok = alg.check_power_nucleus(c, i, j, &Element::basis(x))?;
                    tally.check(ok, || format!("c = b{c}, i = {i}, j = {j}, x = {}", fmt_basis(x)));
                }
            }
        }
    }
    out.push(tally.record("jordan.power_nucleus", "(c^i, c^j, x) = 0"));
    Ok(out)
}

fn lemma(alg: &EnvelopingAlgebra) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    if n < 2 {
        return Err(Error::DegreeBudgetExceeded { needed: 2, cap: n }.into());
    }
    let d = alg.dim();
    let mut out = Vec::new();
    for k in 0..=n - 2 {
        let mut tally = Tally::new();
        for c in 0..d {
            for a in 0..d {
                for b in 0..d {
                    let ok = alg.check_lemma_derivation(c, a, b, k)?;
                    tally.check(ok, || {
                        let r = alg.lemma_residue(c, a, b, k).map(|r| alg.format(&r)).unwrap_or_default();
                        format!("c = b{c}, a = b{a}, b = b{b}, residue {r}")
                    });
                }
            }
        }
        out.push(tally.record(&format!("lemma.n{k}"), "(c^n,a,b) - n c^(n-1) (c,a,b) in U(T)_(n-2)").param("n", k));
    }
    Ok(out)
}

fn expansion(alg: &EnvelopingAlgebra) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    if n < 2 {
        return Err(Error::DegreeBudgetExceeded { needed: 2, cap: n }.into());
    }
    let d = alg.dim();
    let mut out = Vec::new();
    for k in 0..=n - 2 {
        let mut tally = Tally::new();
        for c in 0..d {
            for a in 0..d {
                for b in 0..d {
                    let ok = alg.check_assoc_expansion(c, a, b, k)?;
                    tally.check(ok, || format!("c = b{c}, a = b{a}, b = b{b}"));
                }
            }
        }
        out.push(
            tally
                .record(
                    &format!("expansion.n{k}"),
                    "(c^n,a,b) = n/2 c^(n-1)[a,c,b] - 1/2 sum_(i<n-1) (c^i, D_(a,c)(c^(n-1-i)), b)",
                )
                .param("n", k),
        );
    }
    Ok(out)
}

fn s2(alg: &EnvelopingAlgebra) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    if n < 3 {
        return Err(Error::DegreeBudgetExceeded { needed: 3, cap: n }.into());
    }
    let mut out = Vec::new();
    for row in alg.s2_suite(n - 3)? {
        let k = row.n;
        out.push(
            Record::new(format!("s2.n{k}.product"), "(e^n,f,f)e = n e^n f - n(n-1) e^(n-1)", row.product == row.product_expected)
                .param("n", k)
                .witness(|| format!("{} != {}", alg.format(&row.product), alg.format(&row.product_expected))),
        );
        out.push(
            Record::new(format!("s2.n{k}.eigen"), "R_(f,e)(e^n) = 2n e^n", row.eigen == row.eigen_expected)
                .param("n", k)
                .witness(|| format!("{} != {}", alg.format(&row.eigen), alg.format(&row.eigen_expected))),
        );
    }
    Ok(out)
}

fn hopf(alg: &EnvelopingAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    let h = match Hopf::new(alg) {
        Ok(h) => h,
        Err(Error::VerificationFailure(msg)) => {
            return Ok(vec![Record::new("hopf.coideal", "relators span a coideal", false).witness(|| msg)]);
        }
        Err(e) => return Err(e.into()),
    };
    let fmt_basis = |i: usize| alg.format_basis(i);
    let mut out = vec![Record::new("hopf.coideal", "relators span a coideal", true)];

    let co = h.check_coalgebra(n.min(3))?;
    let k = co.degree;
    out.push(Record::new("hopf.coassociative", "(D x Id)D = (Id x D)D", co.coassociative).param("degree", k));
    out.push(Record::new("hopf.cocommutative", "swap D = D", co.cocommutative).param("degree", k));
    out.push(Record::new("hopf.counit", "(eps x Id)D = Id = (Id x eps)D", co.counit).param("degree", k));
    out.push(
        Record::new("hopf.multiplicative", "D(xy) = D(x)D(y)", co.multiplicative)
            .param("degree", k)
            .param("pairs", co.checked_pairs),
    );

    let all = monomials(alg, n);
    let mut tally = Tally::new();
    for &i in &all {
        let x = Element::basis(i);
        let sx = h.s_map(&x);
        tally.check(h.s_map(&sx) == x && h.counit(&sx) == h.counit(&x), || fmt_basis(i));
        for &j in &all {
            if alg.nf_degree(i) + alg.nf_degree(j) > n {
                continue;
            }
            let y = Element::basis(j);
            let ok = h.s_map(&alg.mul(&x, &y)?) == alg.mul(&sx, &h.s_map(&y))?;
            tally.check(ok, || format!("x = {}, y = {}", fmt_basis(i), fmt_basis(j)));
        }
    }
    out.push(tally.record("hopf.sign", "S(S x) = x, eps(S x) = eps(x), S(xy) = S(x)S(y)"));

    if n >= 2 {
        let k = n.min(4);
        let prim = h.primitives(k)?;
        let t = Subspace::coordinate(alg.nf_count(), alg.degree_range(1))?;
        out.push(
            Record::new("hopf.primitives", "{x : D x = x (x) 1 + 1 (x) x} = T", prim == t)
                .param("degree", k)
                .param("dim", prim.dim()),
        );
    }

    let mut tally = Tally::new();
    for &i in &all {
        for &j in &all {
            if alg.nf_degree(i) + alg.nf_degree(j) > n {
                continue;
            }
            let rep = h.check_divisions(&Element::basis(i), &Element::basis(j))?;
            tally.check(rep.passed(), || format!("x = {}, y = {}: {rep:?}", fmt_basis(i), fmt_basis(j)));
        }
    }
    let division_identity = "sum x1\\(x2 y) = sum x1(x2\\y) = sum (y x1)/x2 = sum (y/x1)x2 = eps(x) y";
    out.push(tally.record("hopf.divisions", division_identity));

    let mut tally = Tally::new();
    for _ in 0..SAMPLES {
        let x = random_element(alg, rng, 0, n / 2, false);
        let y = random_element(alg, rng, 0, n - n / 2, false);
        let rep = h.check_divisions(&x, &y)?;
        tally.check(rep.passed(), || format!("x = {}, y = {}", alg.format(&x), alg.format(&y)));
    }
    out.push(tally.record("hopf.divisions.random", division_identity));

    let mut tally = Tally::new();
    for &i in &all {
        for &j in &all {
            for &l in &all {
                if alg.nf_degree(i) + alg.nf_degree(j) + alg.nf_degree(l) > n {
                    continue;
                }
                let ok = h.check_weak_assoc(&Element::basis(i), &Element::basis(j), &Element::basis(l))?;
                tally.check(ok, || format!("x = {}, y = {}, z = {}", fmt_basis(i), fmt_basis(j), fmt_basis(l)));
            }
        }
    }
    out.push(tally.record("hopf.weak_assoc", "sum x1(y(x2 z)) = sum (x1(y x2))z"));
    Ok(out)
}

fn mainthm(alg: &EnvelopingAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<Record>, CliError> {
    let n = alg.max_degree();
    let sample_deg = n.saturating_sub(2).clamp(1, 2);
    let mut out = Vec::new();
    let proper = |c: &triplex::envelope::IdealClosure| {
        c.within_augmentation && !c.contains_one && (c.meets_t > 0 || c.stabilization.is_some())
    };
    let proper_identity = "I inside ker eps, and I meets T or fills the window";
    let describe = |c: &triplex::envelope::IdealClosure| {
        format!(
            "dim {}, filtered {:?}, contains 1: {}, meets T: {}, stabilization {:?}",
            c.subspace.dim(),
            c.filtered_dims,
            c.contains_one,
            c.meets_t,
            c.stabilization
        )
    };

    for g in 0..alg.dim() {
        let c = alg.right_ideal_closure(&[alg.generator(g)])?;
        out.push(
            Record::new(format!("mainthm.generator.{g}"), proper_identity, proper(&c))
                .param("generator", &alg.names()[g])
                .param("dim", c.subspace.dim())
                .param("meets_t", c.meets_t)
                .witness(|| describe(&c)),
        );
    }
    for k in 0..SAMPLES {
        let x = random_element(alg, rng, 1, sample_deg, false);
        let c = alg.right_ideal_closure(std::slice::from_ref(&x))?;
        out.push(
            Record::new(format!("mainthm.augmented.{k:02}"), proper_identity, proper(&c))
                .param("element", alg.format(&x))
                .param("dim", c.subspace.dim())
                .witness(|| describe(&c)),
        );
    }
    for k in 0..SAMPLES {
        let x = random_element(alg, rng, 0, sample_deg, true);
        let c = alg.right_ideal_closure(std::slice::from_ref(&x))?;
        out.push(
            Record::new(format!("mainthm.unit.{k:02}"), "eps(x) != 0 implies 1 in xU", c.contains_one)
                .param("element", alg.format(&x))
                .witness(|| describe(&c)),
        );
    }
    let aug = alg.augmentation_ideal();
    let gens: Vec<Element> = alg.up_to_degree(n).skip(1).map(Element::basis).collect();
    let c = alg.right_ideal_closure(&gens)?;
    out.push(
        Record::new("mainthm.augmentation", "(ker eps) U = ker eps", c.subspace == aug && c.subspace == alg.counit_kernel()?)
            .param("dim", aug.dim())
            .witness(|| describe(&c)),
    );
    Ok(out)
}

/// A nonzero element supported on normal-form monomials of degree
/// `min_deg..=max_deg` with coefficients in `-3..=3`; with `unit` set the
/// constant term is forced nonzero.
pub fn random_element(alg: &EnvelopingAlgebra, rng: &mut impl Rng, min_deg: usize, max_deg: usize, unit: bool) -> Element {
    loop {
        let mut x = Element::zero();
        let lo = alg.degree_range(min_deg).start;
        for i in lo..alg.up_to_degree(max_deg).end {
            let c: i64 = rng.gen_range(-3..=3);
            x.add_term(i, &Scalar::from_int(c));
        }
        if unit {
            let mut c: i64 = rng.gen_range(-3..=2);
            if c >= 0 {
                c += 1;
            }
            let old = x.coefficient(0);
            x.add_term(0, &(&Scalar::from_int(c) - &old));
        }
        if !x.is_zero() {
            return x;
        }
    }
}
