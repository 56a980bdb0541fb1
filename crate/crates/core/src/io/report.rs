use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chen_ranks_from_cut, clique_polynomial, connectivity, cut_polynomial_guarded, lcs_ranks,
};
use crate::rescaling::{
    cubical_poincare_polynomial, formal_and_coformal, homotopy_ranks, loop_poincare_series,
    FORMALITY_NOTE,
};
use crate::resonance::{lattice_fingerprint, resonance_components_guarded};
use crate::stanley_reisner::hilbert_polynomial_sr;
use crate::{DEFAULT_DMAX, DEFAULT_GUARD, DEFAULT_KMAX};

/// Big integers travel as decimal strings so reports stay exact.
mod decimal {
    use num_bigint::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| s.parse().map_err(D::Error::custom))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportOptions {
    pub dmax: usize,
    pub guard: usize,
    pub kmax: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            dmax: DEFAULT_DMAX,
            guard: DEFAULT_GUARD,
            kmax: DEFAULT_KMAX,
            q: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEcho {
    pub edges: Vec<(String, String)>,
    pub labels: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FingerprintBlock {
    pub dimensions: Vec<usize>,
    pub pairs: Vec<usize>,
    pub triples: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResonanceBlock {
    pub ambient_dim: usize,
    pub codim: usize,
    /// Each component as the list of labels spanning it.
    pub components: Vec<Vec<String>>,
    pub fingerprint: FingerprintBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RescalingBlock {
    #[serde(with = "decimal")]
    pub cubical_poincare: Vec<BigInt>,
    pub formal_and_coformal: bool,
    /// `Φ_m` in the degrees `m = 2q, 4q, ..`.
    #[serde(with = "decimal")]
    pub homotopy_ranks: Vec<BigInt>,
    #[serde(with = "decimal")]
    pub loop_series: Vec<BigInt>,
    pub note: String,
    pub q: usize,
}

/// Everything computed for one graph. Fields are declared in key order, so
/// the JSON rendering is canonical. Polynomials and series are coefficient
/// lists, lowest degree first; rank tables start at degree 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InvariantReport {
    #[serde(with = "decimal")]
    pub chen_ranks: Vec<BigInt>,
    #[serde(with = "decimal")]
    pub clique_polynomial: Vec<BigInt>,
    pub connectivity: usize,
    #[serde(with = "decimal")]
    pub cut_polynomial: Vec<BigInt>,
    pub graph: GraphEcho,
    #[serde(with = "decimal")]
    pub hilbert_series_sr: Vec<BigInt>,
    #[serde(with = "decimal")]
    pub lcs_ranks: Vec<BigInt>,
    pub provenance: ReportOptions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rescaling: Option<RescalingBlock>,
    pub resonance: ResonanceBlock,
}

impl InvariantReport {
    pub fn to_canonical_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn from_canonical_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })
    }
}

pub fn build_report(g: &Graph, opts: &ReportOptions) -> Result<InvariantReport> {
    let names = |w: crate::VertexSet| w.iter().map(|v| g.label(v).to_string()).collect();
    let cut = cut_polynomial_guarded(g, opts.guard)?;
    let res = resonance_components_guarded(g, opts.guard)?;
    let fp = lattice_fingerprint(&res);
    let rescaling = match opts.q {
        None => None,
        Some(q) => Some(RescalingBlock {
            cubical_poincare: cubical_poincare_polynomial(g, q).into_coeffs(),
            formal_and_coformal: formal_and_coformal(g, q),
            homotopy_ranks: homotopy_ranks(g, q, opts.kmax)?.ranks.ranks().to_vec(),
            loop_series: loop_poincare_series(g, q, opts.dmax)?.coeffs().to_vec(),
            note: FORMALITY_NOTE.to_string(),
            q,
        }),
    };
    Ok(InvariantReport {
        chen_ranks: chen_ranks_from_cut(&cut, g.n(), opts.kmax)?
            .ranks()
            .to_vec(),
        clique_polynomial: clique_polynomial(g).into_coeffs(),
        connectivity: connectivity(g).kappa,
        cut_polynomial: cut.into_coeffs(),
        graph: GraphEcho {
            edges: g
                .edges()
                .into_iter()
                .map(|(u, v)| (g.label(u).to_string(), g.label(v).to_string()))
                .collect(),
            labels: g.labels().to_vec(),
        },
        hilbert_series_sr: hilbert_polynomial_sr(g, opts.dmax).coeffs().to_vec(),
        lcs_ranks: lcs_ranks(g, opts.kmax)?.ranks().to_vec(),
        provenance: *opts,
        rescaling,
        resonance: ResonanceBlock {
            ambient_dim: res.ambient_dim,
            codim: res.codim,
            components: res.components.iter().map(|&w| names(w)).collect(),
            fingerprint: FingerprintBlock {
                dimensions: fp.dimensions,
                pairs: fp.pairs,
                triples: fp.triples,
            },
        },
    })
}

/// Three-way verdict distinguishing graphs by clique polynomial, cut
/// polynomial, and resonance intersection lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub clique_equal: bool,
    pub cut_equal: bool,
    pub fingerprint_equal: bool,
}

pub fn compare_graphs(g1: &Graph, g2: &Graph, guard: usize) -> Result<Comparison> {
    let fp = |g: &Graph| resonance_components_guarded(g, guard).map(|r| lattice_fingerprint(&r));
    Ok(Comparison {
        clique_equal: clique_polynomial(g1) == clique_polynomial(g2),
        cut_equal: cut_polynomial_guarded(g1, guard)? == cut_polynomial_guarded(g2, guard)?,
        fingerprint_equal: fp(g1)? == fp(g2)?,
    })
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |b: bool| if b { "equal" } else { "DIFFERENT" };
        writeln!(f, "clique polynomials: {}", word(self.clique_equal))?;
        writeln!(f, "cut polynomials: {}", word(self.cut_equal))?;
        writeln!(
            f,
            "resonance fingerprints: {}",
            word(self.fingerprint_equal)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Graph {
        Graph::family(s).unwrap()
    }

    #[test]
    fn report_round_trips() {
        let opts = ReportOptions {
            q: Some(1),
            kmax: 6,
            dmax: 8,
            ..Default::default()
        };
        let r = build_report(&fam("triforce6"), &opts).unwrap();
        let text = r.to_canonical_string();
        let back = InvariantReport::from_canonical_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_canonical_string(), text);

        let plain = build_report(&fam("cycle:5"), &ReportOptions::default()).unwrap();
        let text = plain.to_canonical_string();
        assert!(!text.contains("rescaling"));
        assert_eq!(InvariantReport::from_canonical_str(&text).unwrap(), plain);
    }

    #[test]
    fn report_keys_are_sorted() {
        let r = build_report(
            &fam("path:4"),
            &ReportOptions {
                q: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        let value: serde_json::Value = serde_json::from_str(&r.to_canonical_string()).unwrap();
        let keys: Vec<&String> = value.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn report_contents() {
        let r = build_report(
            &fam("triforce6"),
            &ReportOptions {
                kmax: 4,
                ..Default::default()
            },
        )
        .unwrap();
        let s = |v: &[BigInt]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        assert_eq!(s(&r.clique_polynomial), "1,6,9,4");
        assert_eq!(s(&r.cut_polynomial), "0,0,6,8,3");
        assert_eq!(s(&r.lcs_ranks), "6,6,20,60");
        assert_eq!(s(&r.chen_ranks), "6,6,20,45");
        assert_eq!(r.connectivity, 2);
        assert_eq!(r.resonance.components[0], vec!["1", "2", "4", "6"]);
    }

    #[test]
    fn guard_propagates() {
        let opts = ReportOptions {
            guard: 3,
            ..Default::default()
        };
        assert_eq!(
            build_report(&fam("path:4"), &opts),
            Err(Error::GuardExceeded { n: 4, guard: 3 })
        );
    }

    #[test]
    fn comparisons() {
        let c = compare_graphs(&fam("path:6"), &fam("dynkinD:6"), 24).unwrap();
        assert_eq!(
            (c.clique_equal, c.cut_equal, c.fingerprint_equal),
            (true, true, false)
        );
        let c = compare_graphs(&fam("cycle:6"), &fam("ycycle:6"), 24).unwrap();
        assert_eq!(
            (c.clique_equal, c.cut_equal, c.fingerprint_equal),
            (true, false, false)
        );
        let c = compare_graphs(&fam("triforce6"), &fam("grid6"), 24).unwrap();
        assert_eq!(
            (c.clique_equal, c.cut_equal, c.fingerprint_equal),
            (true, true, false)
        );
        assert_eq!(
            c.to_string(),
            "clique polynomials: equal\ncut polynomials: equal\nresonance fingerprints: DIFFERENT\n"
        );
        let c = compare_graphs(&fam("grid6"), &fam("grid6"), 24).unwrap();
        assert!(c.clique_equal && c.cut_equal && c.fingerprint_equal);
    }
}
