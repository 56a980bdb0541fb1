//! Fixed regression values for the built-in families, run by `raag selftest`.

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::invariants::{chen_ranks, clique_polynomial, cut_numbers, cut_polynomial, lcs_ranks};
use crate::io::compare_graphs;
use crate::oracles::{
    circuit_chen_series, free_chen, free_lcs, tree_chen_series, tree_cut_numbers,
};
use crate::polyseries::IntPoly;
use crate::rescaling::homotopy_ranks;
use crate::resonance::{lattice_fingerprint, resonance_components};
use crate::{Result, DEFAULT_GUARD};

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(name: impl Into<String>, result: Result<Option<String>>) -> CheckOutcome {
    let (passed, detail) = match result {
        Ok(None) => (true, String::new()),
        Ok(Some(why)) => (false, why),
        Err(e) => (false, e.to_string()),
    };
    CheckOutcome {
        name: name.into(),
        passed,
        detail,
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{what}: got {got:?}, want {want:?}"))
}

fn first_failure(checks: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    checks.into_iter().flatten().next()
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| x.into()).collect()
}

fn label_sets(g: &Graph) -> Result<Vec<Vec<String>>> {
    Ok(resonance_components(g)?
        .components
        .iter()
        .map(|w| {
            g.vertices()
                .difference(*w)
                .iter()
                .map(|v| g.label(v).to_string())
                .collect()
        })
        .collect())
}

fn example_pair() -> Result<Option<String>> {
    let t = Graph::family("triforce6")?;
    let g = Graph::family("grid6")?;
    let p = IntPoly::from_i64(&[1, 6, 9, 4]);
    let q = IntPoly::from_i64(&[0, 0, 6, 8, 3]);
    let cmp = compare_graphs(&t, &g, DEFAULT_GUARD)?;
    let triple = |h: &Graph| resonance_components(h).map(|r| lattice_fingerprint(&r).triples);
    let strs = |v: &[&[&str]]| -> Vec<Vec<String>> {
        v.iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    };
    let mut want_t = strs(&[&["2", "3"], &["2", "5"], &["3", "5"]]);
    let mut want_g = strs(&[&["1", "5"], &["2", "5"], &["2", "6"]]);
    let mut got_t = label_sets(&t)?;
    let mut got_g = label_sets(&g)?;
    for v in [&mut want_t, &mut want_g, &mut got_t, &mut got_g] {
        v.sort();
    }
    Ok(first_failure([
        expect("P(triforce6)", clique_polynomial(&t), p.clone()),
        expect("P(grid6)", clique_polynomial(&g), p),
        expect("Q(triforce6)", cut_polynomial(&t)?, q.clone()),
        expect("Q(grid6)", cut_polynomial(&g)?, q),
        expect("R1(triforce6) complements", got_t, want_t),
        expect("R1(grid6) complements", got_g, want_g),
        expect(
            "triple intersections",
            (triple(&t)?, triple(&g)?),
            (vec![3], vec![2]),
        ),
        expect(
            "compare verdict",
            (cmp.clique_equal, cmp.cut_equal, cmp.fingerprint_equal),
            (true, true, false),
        ),
    ]))
}

fn trees() -> Result<Option<String>> {
    let mut failures = Vec::new();
    for n in 3..=9 {
        for name in ["path", "dynkinD"] {
            let g = Graph::family(&format!("{name}:{n}"))?;
            let cuts = cut_numbers(&g)?;
            let want: Vec<BigInt> = (0..=n)
                .map(|j| tree_cut_numbers(n, j))
                .collect::<Result<_>>()?;
            failures.push(expect(
                &format!("cut numbers of {name}:{n}"),
                cuts.as_slice().to_vec(),
                want,
            ));
            let chen = chen_ranks(&g, 12)?;
            let series = tree_chen_series(n, 12)?;
            failures.push(expect(
                &format!("Chen ranks of {name}:{n}"),
                chen.ranks()[1..].to_vec(),
                series[2..].to_vec(),
            ));
        }
    }
    Ok(first_failure(failures))
}

fn circuits() -> Result<Option<String>> {
    let mut failures = Vec::new();
    for n in 4..=9 {
        let g = Graph::family(&format!("cycle:{n}"))?;
        let nn = n as i64;
        failures.push(expect(
            &format!("P(cycle:{n})"),
            clique_polynomial(&g),
            IntPoly::from_i64(&[1, nn, nn]),
        ));
        failures.push(expect(
            &format!("R1 component count of cycle:{n}"),
            resonance_components(&g)?.components.len(),
            n * (n - 3) / 2,
        ));
        failures.push(expect(
            &format!("Chen ranks of cycle:{n}"),
            chen_ranks(&g, 12)?.ranks()[1..].to_vec(),
            circuit_chen_series(n, 12)?[2..].to_vec(),
        ));
    }
    Ok(first_failure(failures))
}

fn poles() -> Result<Option<String>> {
    let mut failures = Vec::new();
    for n in 2..=5 {
        let e = Graph::family(&format!("empty:{n}"))?;
        failures.push(expect(
            &format!("LCS ranks of empty:{n}"),
            lcs_ranks(&e, 12)?.ranks().to_vec(),
            free_lcs(n, 12),
        ));
        failures.push(expect(
            &format!("Chen ranks of empty:{n}"),
            chen_ranks(&e, 12)?.ranks().to_vec(),
            free_chen(n, 12),
        ));
        let k = Graph::family(&format!("complete:{n}"))?;
        let mut want = vec![0i64; 12];
        want[0] = n as i64;
        failures.push(expect(
            &format!("LCS ranks of complete:{n}"),
            lcs_ranks(&k, 12)?.ranks().to_vec(),
            ints(&want),
        ));
        failures.push(expect(
            &format!("Chen ranks of complete:{n}"),
            chen_ranks(&k, 12)?.ranks().to_vec(),
            ints(&want),
        ));
        failures.push(expect(
            &format!("R1 of complete:{n}"),
            resonance_components(&k)?.components.len(),
            0,
        ));
    }
    Ok(first_failure(failures))
}

fn rescaled() -> Result<Option<String>> {
    let t = Graph::family("triforce6")?;
    let h = homotopy_ranks(&t, 1, 4)?;
    let got: Vec<BigInt> = [2, 4, 6, 8].iter().map(|&m| h.rank(m)).collect();
    Ok(expect(
        "homotopy ranks of triforce6, q = 1",
        got,
        ints(&[6, 6, 20, 60]),
    ))
}

fn verdicts() -> Result<Option<String>> {
    let pairs = [
        ("path:6", "dynkinD:6", (true, true, false)),
        ("cycle:6", "ycycle:6", (true, false, false)),
        ("triforce6", "grid6", (true, true, false)),
    ];
    let mut failures = Vec::new();
    for (a, b, want) in pairs {
        let c = compare_graphs(&Graph::family(a)?, &Graph::family(b)?, DEFAULT_GUARD)?;
        failures.push(expect(
            &format!("compare {a} {b}"),
            (c.clique_equal, c.cut_equal, c.fingerprint_equal),
            want,
        ));
    }
    Ok(first_failure(failures))
}

/// Runs every regression check; never panics.
pub fn run_all() -> Vec<CheckOutcome> {
    vec![
        outcome("two six-vertex triangulations", example_pair()),
        outcome("trees n = 3..9", trees()),
        outcome("circuits n = 4..9", circuits()),
        outcome("free and free abelian groups", poles()),
        outcome("rescaled homotopy ranks", rescaled()),
        outcome("compare verdicts", verdicts()),
    ]
}
