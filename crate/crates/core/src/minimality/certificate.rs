use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::atom::{Atom, Witness};
use crate::bracket::{kauffman_bracket_with_limit, span_bound, DEFAULT_STATE_LIMIT};
use crate::diagram::{serialize_pd, Diagram, LongDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    MinimalClassical,
    MinimalFramed,
    MinimalLong,
    Inconclusive,
}

impl Verdict {
    pub fn is_minimal(self) -> bool {
        self != Verdict::Inconclusive
    }
}

/// Which minimality statement a certificate relies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Good diagram of a classical knot: minimal among classical diagrams.
    GoodClassicalKnot,
    /// Good diagram of a framed virtual link: minimal in the framed category.
    GoodFramedLink,
    /// Long virtual knot with good closure: minimal among long diagrams.
    GoodLongClosure,
}

/// The hypothesis a certificate checks, reported when it fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Classical,
    Knot,
    Good,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Category {
    Classical,
    Framed,
    Long,
}

#[derive(Clone, Copy, Debug)]
pub struct CertifyOptions {
    /// Largest crossing count for which the bracket span is computed.
    pub limit: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            limit: DEFAULT_STATE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub input: String,
    pub n: usize,
    pub classical: bool,
    pub knot: bool,
    pub good: bool,
    pub chi: i64,
    /// `None` when the state sum would exceed the limit.
    pub span: Option<i64>,
    pub bound: i64,
    pub verdict: Verdict,
    pub theorem: Theorem,
    pub failed: Option<Predicate>,
    pub witnesses: Vec<Witness>,
}

impl Certificate {
    /// Key-sorted JSON, stable across runs.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("certificate serializes");
        serde_json::to_string(&value).expect("value serializes")
    }
}

pub fn input_digest(d: &Diagram) -> String {
    let hash = Sha256::digest(serialize_pd(d).as_bytes());
    let hex: String = hash.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

struct Facts {
    n: usize,
    classical: bool,
    knot: bool,
    good: bool,
    chi: i64,
    span: Option<i64>,
    witnesses: Vec<Witness>,
}

fn facts(d: &Diagram, opts: &CertifyOptions) -> Facts {
    let atom = Atom::build(d);
    let report = atom.goodness(d);
    let span = kauffman_bracket_with_limit(d, opts.limit)
        .ok()
        .map(|p| p.span().expect("bracket is nonzero"));
    Facts {
        n: d.crossing_count(),
        classical: d.is_classical(),
        knot: d.is_knot(),
        good: report.good,
        chi: atom.euler_characteristic(),
        span,
        witnesses: report.witnesses,
    }
}

fn assemble(
    input: String,
    f: Facts,
    theorem: Theorem,
    failed: Option<Predicate>,
    success: Verdict,
) -> Certificate {
    Certificate {
        input,
        n: f.n,
        classical: f.classical,
        knot: f.knot,
        good: f.good,
        chi: f.chi,
        span: f.span,
        bound: span_bound(f.n, f.chi),
        verdict: if failed.is_none() {
            success
        } else {
            Verdict::Inconclusive
        },
        theorem,
        failed,
        witnesses: f.witnesses,
    }
}

/// Minimal among classical diagrams of the same knot when the diagram is
/// classical, has one component and is good. Says nothing about virtual
/// diagrams of the same knot.
pub fn certify_classical(d: &Diagram, opts: &CertifyOptions) -> Certificate {
    let f = facts(d, opts);
    let failed = if !f.classical {
        Some(Predicate::Classical)
    } else if !f.knot {
        Some(Predicate::Knot)
    } else if !f.good {
        Some(Predicate::Good)
    } else {
        None
    };
    assemble(
        input_digest(d),
        f,
        Theorem::GoodClassicalKnot,
        failed,
        Verdict::MinimalClassical,
    )
}

/// Minimal in the framed category when good; links and virtual diagrams
/// are allowed.
pub fn certify_framed(d: &Diagram, opts: &CertifyOptions) -> Certificate {
    let f = facts(d, opts);
    let failed = (!f.good).then_some(Predicate::Good);
    assemble(
        input_digest(d),
        f,
        Theorem::GoodFramedLink,
        failed,
        Verdict::MinimalFramed,
    )
}

/// Minimal among long diagrams when the closure is good.
pub fn certify_long(ld: &LongDiagram, opts: &CertifyOptions) -> Certificate {
    let closure = ld.closure();
    let f = facts(closure, opts);
    let failed = (!f.good).then_some(Predicate::Good);
    let input = match ld.ends() {
        Some((tail, head)) => format!("{}:ends={}-{}", input_digest(closure), tail, head),
        None => input_digest(closure),
    };
    assemble(
        input,
        f,
        Theorem::GoodLongClosure,
        failed,
        Verdict::MinimalLong,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{parse_gauss, parse_long_pd, parse_pd};

    fn opts() -> CertifyOptions {
        CertifyOptions::default()
    }

    #[test]
    fn trefoil_certified() {
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let c = certify_classical(&t, &opts());
        assert_eq!(c.verdict, Verdict::MinimalClassical);
        assert_eq!((c.n, c.chi, c.span, c.bound), (3, 2, Some(12), 12));
        assert!(c.witnesses.is_empty());
        assert_eq!(certify_framed(&t, &opts()).verdict, Verdict::MinimalFramed);
    }

    #[test]
    fn negative_controls() {
        let k = parse_pd("X(1,2,2,1)").unwrap();
        let c = certify_classical(&k, &opts());
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.failed, Some(Predicate::Good));
        assert!(!c.witnesses.is_empty());

        let v = parse_gauss("O1+O2+U1+U2+").unwrap();
        let c = certify_classical(&v, &opts());
        assert_eq!(c.failed, Some(Predicate::Classical));
        assert_eq!(certify_framed(&v, &opts()).verdict, Verdict::Inconclusive);
    }

    #[test]
    fn hopf_is_framed_minimal() {
        let h = parse_pd("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert_eq!(certify_framed(&h, &opts()).verdict, Verdict::MinimalFramed);
        assert_eq!(certify_classical(&h, &opts()).failed, Some(Predicate::Knot));
    }

    #[test]
    fn long_certificates() {
        let long = parse_long_pd("X(1,4,2,5) X(3,6,4,7) X(5,2,6,3)").unwrap();
        assert_eq!(certify_long(&long, &opts()).verdict, Verdict::MinimalLong);
        let kink = parse_long_pd("X(1,2,3,1)").unwrap();
        assert_eq!(certify_long(&kink, &opts()).verdict, Verdict::Inconclusive);
        let c = certify_long(&LongDiagram::trivial(), &opts());
        assert_eq!((c.verdict, c.n), (Verdict::MinimalLong, 0));
    }

    #[test]
    fn span_omitted_over_limit() {
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let c = certify_classical(&t, &CertifyOptions { limit: 2 });
        assert_eq!(c.span, None);
        assert!(c.to_json().contains("\"span\":null"));
    }

    #[test]
    fn json_keys_sorted() {
        let t = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let json = certify_classical(&t, &opts()).to_json();
        let keys: Vec<&str> = [
            "bound",
            "chi",
            "classical",
            "failed",
            "good",
            "input",
            "knot",
            "n",
            "span",
            "theorem",
            "verdict",
            "witnesses",
        ]
        .to_vec();
        let mut last = 0;
        for k in keys {
            let at = json.find(&format!("\"{k}\"")).unwrap();
            assert!(at >= last, "{k} out of order in {json}");
            last = at;
        }
        assert!(json.contains("\"verdict\":\"minimal-classical\""));
    }
}
