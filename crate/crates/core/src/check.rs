//! Seeded property suites.
//!
//! Each suite runs a fixed list of properties over `cases` random instances
//! drawn from one seeded generator, so a seed reproduces a report exactly.
//! A failing case records its inputs in canonical text form.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::bordism::Bordism;
use crate::multiset::ScalarMultiset;
use crate::object::{BoundaryObject, Sign};
use crate::random::{self, Limits};
use crate::smc::{
    dualizable_from_matrix, evaluate, evaluate_term, CobBackend, Duality, DualizablePair, Matrix,
    MatrixBackend, SmcBackend,
};
use crate::term::{denote, parse, quote, ObjExpr, Term};
use crate::trace::{
    act_on_theta, classify_scalar, find_generating_witness, theta, trace_of, AutomorphismPoint,
    Generation, Obstruction, ThetaSpec,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Laws,
    Cyclicity,
    Naturality,
    Roundtrip,
    Classify,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Laws,
        Suite::Cyclicity,
        Suite::Naturality,
        Suite::Roundtrip,
        Suite::Classify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Laws => "laws",
            Suite::Cyclicity => "cyclicity",
            Suite::Naturality => "naturality",
            Suite::Roundtrip => "roundtrip",
            Suite::Classify => "classify",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub seed: u64,
    pub cases: usize,
    /// Search bound for the classify suite.
    pub bound: usize,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            cases: 100,
            bound: 4,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub case: usize,
    pub reproducer: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl PropertyResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub suite: Suite,
    pub config: CheckConfig,
    pub properties: Vec<PropertyResult>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Failure)> {
        self.properties
            .iter()
            .flat_map(|p| p.failures.iter().map(move |f| (p.name.as_str(), f)))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let props: Vec<_> = self
            .properties
            .iter()
            .map(|p| {
                serde_json::json!({
                    "name": p.name,
                    "checked": p.checked,
                    "failures": p.failures.iter().map(|f| serde_json::json!({
                        "case": f.case,
                        "reproducer": f.reproducer,
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({
            "suite": self.suite.name(),
            "seed": self.config.seed,
            "cases": self.config.cases,
            "bound": self.config.bound,
            "properties": props,
            "notes": self.notes,
            "result": if self.passed() { "pass" } else { "fail" },
        })
    }
}

/// Failures shown per property in text output.
const SHOWN_FAILURES: usize = 5;

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {} seed {} cases {}",
            self.suite, self.config.seed, self.config.cases
        )?;
        for p in &self.properties {
            let ok = p.checked - p.failures.len();
            writeln!(
                f,
                "  {}: {ok}/{} {}",
                p.name,
                p.checked,
                if p.passed() { "ok" } else { "FAILED" }
            )?;
            for fail in p.failures.iter().take(SHOWN_FAILURES) {
                writeln!(f, "    case {}: {}", fail.case, fail.reproducer)?;
            }
            if p.failures.len() > SHOWN_FAILURES {
                writeln!(f, "    ... {} more", p.failures.len() - SHOWN_FAILURES)?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  {n}")?;
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "fail" })
    }
}

struct Runner {
    rng: ChaCha8Rng,
    cases: usize,
    properties: Vec<PropertyResult>,
}

impl Runner {
    fn new(config: &CheckConfig) -> Self {
        Self {
            rng: random::seeded(config.seed),
            cases: config.cases,
            properties: Vec::new(),
        }
    }

    /// Run `case` once per instance; `Err` carries the reproducer.
    fn property(&mut self, name: &str, mut case: impl FnMut(&mut ChaCha8Rng) -> Result<(), String>) {
        let mut failures = Vec::new();
        for i in 0..self.cases {
            if let Err(reproducer) = case(&mut self.rng) {
                failures.push(Failure { case: i, reproducer });
            }
        }
        self.properties.push(PropertyResult {
            name: name.to_string(),
            checked: self.cases,
            failures,
        });
    }

    fn finish(self, suite: Suite, config: &CheckConfig, notes: Vec<String>) -> Report {
        Report {
            suite,
            config: config.clone(),
            properties: self.properties,
            notes,
        }
    }
}

fn expect_eq<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T, inputs: impl FnOnce() -> String) -> Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{}; lhs={lhs}; rhs={rhs}", inputs()))
    }
}

fn show(b: &Bordism) -> String {
    format!("[{b}]")
}

pub fn run(suite: Suite, config: &CheckConfig) -> Report {
    match suite {
        Suite::Laws => laws(config),
        Suite::Cyclicity => cyclicity(config),
        Suite::Naturality => naturality(config),
        Suite::Roundtrip => roundtrip(config),
        Suite::Classify => classify(config),
    }
}

/// Law limits: word lengths up to 8, labels up to 10.
const LAW_LIMITS: Limits = Limits {
    max_len: 8,
    label_bound: 10,
    max_circles: 2,
};

/// Category, monoidal, symmetry, duality and scalar-monoid laws, plus the
/// term-level decision procedure.
pub fn laws(config: &CheckConfig) -> Report {
    let mut r = Runner::new(config);
    let lim = LAW_LIMITS;

    r.property("associativity", |rng| {
        let (f, g) = random::composable_pair(rng, &lim);
        let h = random::bordism_from(rng, g.tgt(), &lim);
        let lhs = f.compose(&g).and_then(|fg| fg.compose(&h)).map_err(|e| e.to_string())?;
        let rhs = g.compose(&h).and_then(|gh| f.compose(&gh)).map_err(|e| e.to_string())?;
        expect_eq(&lhs, &rhs, || format!("f={}; g={}; h={}", show(&f), show(&g), show(&h)))
    });

    r.property("interchange", |rng| {
        let small = Limits { max_len: 4, ..lim };
        let (f, h) = random::composable_pair(rng, &small);
        let (g, k) = random::composable_pair(rng, &small);
        let lhs = f.tensor(&g).compose(&h.tensor(&k)).map_err(|e| e.to_string())?;
        let rhs = f.compose(&h).map_err(|e| e.to_string())?.tensor(&g.compose(&k).map_err(|e| e.to_string())?);
        expect_eq(&lhs, &rhs, || {
            format!("f={}; g={}; h={}; k={}", show(&f), show(&g), show(&h), show(&k))
        })
    });

    r.property("unit-laws", |rng| {
        let f = random::bordism(rng, &lim);
        let left = Bordism::identity(f.src()).compose(&f).map_err(|e| e.to_string())?;
        let right = f.compose(&Bordism::identity(f.tgt())).map_err(|e| e.to_string())?;
        let e = Bordism::empty();
        let ok = left == f && right == f && f.tensor(&e) == f && e.tensor(&f) == f;
        ok.then_some(()).ok_or_else(|| format!("f={}", show(&f)))
    });

    r.property("symmetry-naturality", |rng| {
        let small = Limits { max_len: 4, ..lim };
        let f = random::bordism(rng, &small);
        let g = random::bordism(rng, &small);
        let lhs = f
            .tensor(&g)
            .compose(&Bordism::swap(f.tgt(), g.tgt()))
            .map_err(|e| e.to_string())?;
        let rhs = Bordism::swap(f.src(), g.src())
            .compose(&g.tensor(&f))
            .map_err(|e| e.to_string())?;
        expect_eq(&lhs, &rhs, || format!("f={}; g={}", show(&f), show(&g)))
    });

    r.property("symmetry-involutive", |rng| {
        let a = random::word(rng, 4);
        let b = random::word(rng, 4);
        let twice = Bordism::swap(&a, &b)
            .compose(&Bordism::swap(&b, &a))
            .map_err(|e| e.to_string())?;
        expect_eq(&twice, &Bordism::identity(&a.tensor(&b)), || format!("a={a}; b={b}"))
    });

    r.property("zigzag", |rng| {
        let x = random::word(rng, 6);
        zigzags_hold(&x).then_some(()).ok_or_else(|| format!("x={x}"))
    });

    r.property("scalar-monoid", |rng| {
        let [a, b, c] = [0; 3].map(|_| Bordism::closed(random::circles(rng, 4, 10)));
        let shown = || format!("a={}; b={}; c={}", show(&a), show(&b), show(&c));
        let e = Bordism::empty();
        let assoc = a.tensor(&b).tensor(&c) == a.tensor(&b.tensor(&c));
        let comm = a.tensor(&b) == b.tensor(&a);
        let unit = a.tensor(&e) == a && a.compose(&e).ok() == Some(a.clone());
        let compose_is_union = a.compose(&b).ok() == Some(a.tensor(&b));
        let hom = classify_scalar(&a.tensor(&b)).ok()
            == Some(classify_scalar(&a).unwrap() + classify_scalar(&b).unwrap());
        (assoc && comm && unit && compose_is_union && hom)
            .then_some(())
            .ok_or_else(shown)
    });

    r.property("term-laws", |rng| {
        let dom = random::word(rng, 3);
        let t = random::term(rng, &dom, 3, 5);
        let (lhs, rhs) = rewrite_pair(rng, &t);
        match (denote(&lhs), denote(&rhs)) {
            (Ok(l), Ok(r)) if l == r => Ok(()),
            _ => Err(format!("lhs=`{lhs}`; rhs=`{rhs}`")),
        }
    });

    r.property("term-distinguishes", |rng| {
        let dom = random::word(rng, 3);
        let t = random::term(rng, &dom, 3, 5);
        let perturbed = perturb(rng, &t);
        match (denote(&t), denote(&perturbed)) {
            (Ok(a), Ok(b)) if a != b => Ok(()),
            _ => Err(format!("t=`{t}`; perturbed=`{perturbed}`")),
        }
    });

    r.finish(Suite::Laws, config, Vec::new())
}

/// Both zig-zag composites for the nested duality data of `x` are identities.
pub fn zigzags_hold(x: &BoundaryObject) -> bool {
    CobBackend.duality_for(x).check_zigzags(&CobBackend).unwrap_or(false)
}

/// Two terms built from `t` that the free-category laws identify.
pub fn rewrite_pair<R: Rng + ?Sized>(rng: &mut R, t: &Term) -> (Term, Term) {
    let (dom, cod) = t.typecheck().expect("well-typed");
    let k = rng.gen_range(-3..=3);
    match rng.gen_range(0..8) {
        0 => (Term::seq(t.clone(), Term::id_word(&cod)), t.clone()),
        1 => (Term::seq(Term::id_word(&dom), t.clone()), t.clone()),
        2 => (Term::par(t.clone(), Term::Id(ObjExpr::Unit)), t.clone()),
        3 => (
            Term::seq(
                Term::par(t.clone(), Term::alpha(k)),
                Term::Swap(ObjExpr::from_word(&cod), ObjExpr::Plus),
            ),
            Term::seq(
                Term::Swap(ObjExpr::from_word(&dom), ObjExpr::Plus),
                Term::par(Term::alpha(k), t.clone()),
            ),
        ),
        4 => (
            Term::seq(
                Term::par(t.clone(), Term::Id(ObjExpr::Plus)),
                Term::par(Term::id_word(&cod), Term::alpha(k)),
            ),
            Term::seq(
                Term::par(Term::id_word(&dom), Term::alpha(k)),
                Term::par(t.clone(), Term::Id(ObjExpr::Plus)),
            ),
        ),
        5 => (Term::seq(t.clone(), zigzag_identity(&cod)), t.clone()),
        6 => (Term::seq(zigzag_identity(&dom), t.clone()), t.clone()),
        _ => {
            let u = random::term(rng, &cod, 2, 5);
            let (_, ucod) = u.typecheck().expect("well-typed");
            let v = random::term(rng, &ucod, 2, 5);
            (
                Term::seq(Term::seq(t.clone(), u.clone()), v.clone()),
                Term::seq(t.clone(), Term::seq(u, v)),
            )
        }
    }
}

/// The zig-zag on the last letter of `x`, which straightens to `id(x)`.
fn zigzag_identity(x: &BoundaryObject) -> Term {
    let Some(&last) = x.signs().last() else {
        return Term::Id(ObjExpr::Unit);
    };
    let (pre, _) = x.split_at(x.len() - 1);
    let straightened = match last {
        Sign::Plus => Term::seq(
            Term::par(Term::Coev, Term::Id(ObjExpr::Plus)),
            Term::par(Term::Id(ObjExpr::Plus), Term::Ev),
        ),
        Sign::Minus => Term::seq(
            Term::par(Term::Id(ObjExpr::Minus), Term::Coev),
            Term::par(Term::Ev, Term::Id(ObjExpr::Minus)),
        ),
    };
    if pre.is_empty() {
        straightened
    } else {
        Term::par(Term::id_word(&pre), straightened)
    }
}

/// A term whose denotation provably differs from `t`: one extra label on a
/// positive output strand, or an extra circle.
pub fn perturb<R: Rng + ?Sized>(rng: &mut R, t: &Term) -> Term {
    let (_, cod) = t.typecheck().expect("well-typed");
    let cod = &cod;
    let plus: Vec<usize> = (0..cod.len()).filter(|&i| cod[i] == Sign::Plus).collect();
    if plus.is_empty() || rng.gen_bool(0.25) {
        let loop_term = quote(&Bordism::circle(rng.gen_range(-3..=3)));
        return Term::par(t.clone(), loop_term);
    }
    let i = plus[rng.gen_range(0..plus.len())];
    let k = if rng.gen_bool(0.5) { 1 } else { -1 };
    let (pre, rest) = cod.split_at(i);
    let (_, post) = rest.split_at(1);
    let mut parts = Vec::new();
    if !pre.is_empty() {
        parts.push(Term::id_word(&pre));
    }
    parts.push(Term::alpha(k));
    if !post.is_empty() {
        parts.push(Term::id_word(&post));
    }
    Term::seq(t.clone(), Term::par_all(parts).expect("nonempty"))
}

/// Largest word length used at each matrix dimension, so that the middle of
/// a serial decomposition stays at a few hundred basis vectors.
pub fn naturality_max_len(dim: usize) -> usize {
    match dim {
        0 | 1 => 6,
        2 => 3,
        _ => 2,
    }
}

/// Closure is invariant under cyclic rotation, in bordisms and in matrices.
pub fn cyclicity(config: &CheckConfig) -> Report {
    let mut r = Runner::new(config);
    let lim = Limits {
        max_len: 6,
        label_bound: 10,
        max_circles: 2,
    };

    r.property("bordism-cyclicity", |rng| {
        let (f, g) = random::opposing_pair(rng, &lim);
        let fg = f.compose(&g).and_then(|x| x.trace_close()).map_err(|e| e.to_string())?;
        let gf = g.compose(&f).and_then(|x| x.trace_close()).map_err(|e| e.to_string())?;
        expect_eq(&fg, &gf, || format!("f={}; g={}", show(&f), show(&g)))
    });

    r.property("closure-agrees-with-direct-gluing", |rng| {
        let b = random::endomorphism(rng, &lim);
        let via_duality = b.trace_close().map_err(|e| e.to_string())?;
        let direct = b.trace_close_direct().map_err(|e| e.to_string())?;
        expect_eq(&via_duality, &direct, || format!("b={}", show(&b)))
    });

    r.property("matrix-cyclicity", |rng| {
        let m = MatrixBackend;
        let (x, z) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
        let f = random::matrix(rng, z, x);
        let g = random::matrix(rng, x, z);
        let fg = m.compose(&f, &g).map_err(|e| e.to_string())?;
        let gf = m.compose(&g, &f).map_err(|e| e.to_string())?;
        let lhs = trace_of(&m, &m.standard_duality(x), &fg).map_err(|e| e.to_string())?;
        let rhs = trace_of(&m, &m.standard_duality(z), &gf).map_err(|e| e.to_string())?;
        let classical = Matrix::scalar(fg.trace().map_err(|e| e.to_string())?);
        (lhs == rhs && lhs == classical)
            .then_some(())
            .ok_or_else(|| format!("f={f}; g={g}; lhs={lhs}; rhs={rhs}"))
    });

    r.finish(Suite::Cyclicity, config, Vec::new())
}

/// The image under the classified functor of the nested duality data of `w`.
pub fn image_duality<B: SmcBackend>(
    backend: &B,
    pair: &DualizablePair<B>,
    w: &BoundaryObject,
) -> Result<Duality<B>, B::Error> {
    let d = Bordism::duality_data(w);
    Ok(Duality {
        object: pair.word_object(backend, w),
        dual: pair.word_object(backend, &d.dual),
        ev: evaluate(&d.ev, pair, backend)?,
        coev: evaluate(&d.coev, pair, backend)?,
    })
}

/// Closing then evaluating equals evaluating then taking the trace.
pub fn naturality(config: &CheckConfig) -> Report {
    let mut r = Runner::new(config);
    r.property("trace-naturality", |rng| {
        let dim = rng.gen_range(1..=4);
        let lim = Limits {
            max_len: naturality_max_len(dim),
            label_bound: 10,
            max_circles: 2,
        };
        let b = random::endomorphism(rng, &lim);
        let a = random::invertible_matrix(rng, dim);
        let inputs = || format!("b={}; a={a}", show(&b));
        let pair = dualizable_from_matrix(&a).map_err(|e| e.to_string())?;
        let m = MatrixBackend;
        let closed = b.trace_close().map_err(|e| e.to_string())?;
        let lhs = evaluate(&closed, &pair, &m).map_err(|e| e.to_string())?;
        let fb = evaluate(&b, &pair, &m).map_err(|e| e.to_string())?;
        let duality = image_duality(&m, &pair, b.src()).map_err(|e| e.to_string())?;
        let rhs = trace_of(&m, &duality, &fb).map_err(|e| e.to_string())?;
        expect_eq(&lhs, &rhs, inputs)
    });
    r.finish(Suite::Naturality, config, Vec::new())
}

/// Quotation, printing and term evaluation round trips.
pub fn roundtrip(config: &CheckConfig) -> Report {
    let mut r = Runner::new(config);
    let lim = Limits::default();

    r.property("denote-quote", |rng| {
        let b = random::bordism(rng, &lim);
        let q = quote(&b);
        match denote(&q) {
            Ok(d) if d == b => Ok(()),
            Ok(d) => Err(format!("b={}; quote=`{q}`; denote={}", show(&b), show(&d))),
            Err(e) => Err(format!("b={}; quote=`{q}`; {e}", show(&b))),
        }
    });

    r.property("parse-print", |rng| {
        let dom = random::word(rng, 4);
        let t = random::term(rng, &dom, 4, 6);
        let printed = t.to_string();
        match parse(&printed) {
            Ok(back) if back == t => Ok(()),
            _ => Err(format!("t=`{printed}`")),
        }
    });

    r.property("two-path-evaluation", |rng| {
        let dom = random::word(rng, 2);
        let t = random::term(rng, &dom, 3, 4);
        let a = random::invertible_matrix(rng, 2);
        let pair = dualizable_from_matrix(&a).map_err(|e| e.to_string())?;
        let direct = evaluate_term(&t, &pair, &MatrixBackend).map_err(|e| e.to_string())?;
        let b = denote(&t).map_err(|e| e.to_string())?;
        let via = evaluate(&b, &pair, &MatrixBackend).map_err(|e| e.to_string())?;
        expect_eq(&direct, &via, || format!("t=`{t}`; a={a}"))
    });

    r.finish(Suite::Roundtrip, config, Vec::new())
}

/// Every multiset with at most `bound` elements drawn from `[-bound, bound]`.
pub fn all_targets(bound: usize) -> Vec<ScalarMultiset> {
    fn go(start: i64, hi: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<ScalarMultiset>) {
        out.push(cur.iter().copied().collect());
        if left == 0 {
            return;
        }
        for l in start..=hi {
            cur.push(l);
            go(l, hi, left - 1, cur, out);
            cur.pop();
        }
    }
    let b = bound as i64;
    let mut out = Vec::new();
    go(-b, b, bound, &mut Vec::new(), &mut out);
    out
}

/// Classification of scalars and the generation results at `bound`.
pub fn classify(config: &CheckConfig) -> Report {
    let mut r = Runner::new(config);
    let mut notes = Vec::new();

    r.property("theta-at-generator", |rng| {
        let spec = random::theta_spec(rng, 8, 10);
        let pair = CobBackend.generator_pair();
        let scalar = theta(&CobBackend, &pair, &spec).map_err(|e| e.to_string())?;
        let got = classify_scalar(&scalar).map_err(|e| e.to_string())?;
        expect_eq(&got, spec.exponents(), || format!("spec={spec}"))
    });

    r.property("conjugation-invariance", |rng| {
        let obj = random::word(rng, 5);
        let point = AutomorphismPoint::new(random::automorphism(rng, &obj, 5)).map_err(|e| e.to_string())?;
        let u = random::labelled_permutation(rng, &obj, 5);
        let conj = point.conjugate(&u).map_err(|e| e.to_string())?;
        let spec = random::theta_spec(rng, 3, 3);
        expect_eq(&act_on_theta(&point, &spec), &act_on_theta(&conj, &spec), || {
            format!("point={point}; u={}; spec={spec}", show(&u))
        })
    });

    let targets = all_targets(config.bound);
    for k in [1i64, -1] {
        let spec = ThetaSpec::new([k]);
        let mut failures = Vec::new();
        for (i, target) in targets.iter().enumerate() {
            let ok = match find_generating_witness(&spec, target, config.bound) {
                Generation::Witness(p) => act_on_theta(&p, &spec) == *target,
                _ => false,
            };
            if !ok {
                failures.push(Failure {
                    case: i,
                    reproducer: format!("spec={spec}; target={target}"),
                });
            }
        }
        notes.push(format!(
            "{spec}: {} of {} targets witnessed",
            targets.len() - failures.len(),
            targets.len()
        ));
        r.properties.push(PropertyResult {
            name: format!("{spec}-generates"),
            checked: targets.len(),
            failures,
        });
    }

    let expected: [(ThetaSpec, ScalarMultiset, &str); 2] = [
        (ThetaSpec::new([2]), ScalarMultiset::singleton(1), "divisibility"),
        (ThetaSpec::new([1, 1]), ScalarMultiset::singleton(3), "component-count"),
    ];
    for (spec, target, obstruction) in expected {
        let result = find_generating_witness(&spec, &target, config.bound);
        let (ok, desc) = match &result {
            Generation::Obstructed(o) => (o.name() == obstruction, format!("none ({o})")),
            Generation::Witness(p) => (false, format!("witness {p}")),
            Generation::NotFound { bound } => (false, format!("none (not found within bound {bound})")),
        };
        notes.push(format!("{spec} on {target}: {desc}"));
        r.properties.push(PropertyResult {
            name: format!("{spec}-misses-{target}"),
            checked: 1,
            failures: if ok {
                Vec::new()
            } else {
                vec![Failure {
                    case: 0,
                    reproducer: format!("spec={spec}; target={target}; expected {obstruction}"),
                }]
            },
        });
    }

    r.finish(Suite::Classify, config, notes)
}

/// Convenience for callers that only need to know whether an obstruction is
/// the expected one.
pub fn obstruction_of(spec: &ThetaSpec, target: &ScalarMultiset, bound: usize) -> Option<Obstruction> {
    match find_generating_witness(spec, target, bound) {
        Generation::Obstructed(o) => Some(o),
        _ => None,
    }
}
