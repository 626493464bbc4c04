//! One line per acceptance criterion. Runs without the test harness so the
//! lines appear in `cargo test` output; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use thetadisk::globular::enumerate_cardinals_brute;
use thetadisk::itree::{vee, wedge, Flavor};
use thetadisk::labeled::{con_dualize, figure_example, validate_cropped, xi, xi_inverse, CroppedTree, LabeledTree};
use thetadisk::ograph::{gamma, gamma_prime, upsilon, upsilon_prime};
use thetadisk::omega::{enumerate_cells, enumerate_cells_brute};
use thetadisk::ordinal::{interval_maps, ord_maps, Ordinal};
use thetadisk::verify::{
    check_L, check_gamma, check_itree_duality, check_omega_laws, check_ordinal_duality, check_phi, check_psi, check_xi,
    Bounds, Report,
};

const ORDINAL_RUNTIME: Duration = Duration::from_secs(10);
const PHI_RUNTIME: Duration = Duration::from_secs(120);
const L_RUNTIME: Duration = Duration::from_secs(300);
/// Σ |I₊([m],[n])| over 0 ≤ m, n ≤ 5, from the brute-force enumerator below.
const INTERVAL_MAPS_UP_TO_5: u64 = 462;
const INTERVAL_MAPS_FLOOR: u64 = 251;
/// Globular cardinals with at most 6 vertices, including the empty one.
const CARDINALS_UP_TO_6: usize = 5;
/// Objects of iDisk of height ≤ 3 with labels ≤ [3].
const ITREE_OBJECTS: u64 = 14;

fn bounds(spec: &str) -> Bounds {
    spec.parse().expect("pinned bounds parse")
}

fn ord(n: i64) -> Ordinal {
    Ordinal::new(n).unwrap()
}

/// Every function `[m] → [n]` by counting, filtered to monotone maps.
fn brute_monotone(m: i64, n: i64) -> Vec<Vec<usize>> {
    let (len, base) = ((m + 1) as u32, (n + 1) as usize);
    if base == 0 {
        return if len == 0 { vec![vec![]] } else { vec![] };
    }
    let total = base.pow(len);
    (0..total)
        .map(|mut code| {
            (0..len)
                .map(|_| {
                    let d = code % base;
                    code /= base;
                    d
                })
                .collect::<Vec<_>>()
        })
        .filter(|f| f.windows(2).all(|w| w[0] <= w[1]))
        .collect()
}

fn brute_interval(m: i64, n: i64) -> Vec<Vec<usize>> {
    brute_monotone(m, n)
        .into_iter()
        .filter(|f| f.first() == Some(&0) && f.last() == Some(&(n as usize)))
        .collect()
}

fn counts(r: &Report) -> String {
    r.counts.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

fn failure(r: &Report) -> String {
    r.counterexample.as_ref().map(|c| format!(" counterexample {c}")).unwrap_or_default()
}

struct Line {
    pass: bool,
    text: String,
}

fn criterion_1() -> Line {
    let b = bounds("vertices=5");
    let start = Instant::now();
    let r = check_ordinal_duality(&b);
    let elapsed = start.elapsed();
    let mut brute_total = 0u64;
    let mut agree = true;
    for m in 0..=5 {
        for n in 0..=5 {
            let brute: BTreeSet<Vec<usize>> = brute_interval(m, n).into_iter().collect();
            let lib: BTreeSet<Vec<usize>> =
                interval_maps(ord(m), ord(n)).iter().map(|f| f.underlying().images().to_vec()).collect();
            agree &= brute == lib;
            brute_total += brute.len() as u64;
        }
    }
    let tested = r.counts["interval_maps"];
    let pass = r.pass
        && agree
        && tested == INTERVAL_MAPS_UP_TO_5
        && brute_total == INTERVAL_MAPS_UP_TO_5
        && tested >= INTERVAL_MAPS_FLOOR
        && elapsed < ORDINAL_RUNTIME;
    Line {
        pass,
        text: format!(
            "ordinal/interval duality, m,n <= 5, composable pairs m,n,k <= 4: {} ({tested} interval maps, pinned {INTERVAL_MAPS_UP_TO_5} >= {INTERVAL_MAPS_FLOOR}; brute force agrees: {agree}; {:.2?} < {:?}){}",
            counts(&r),
            elapsed,
            ORDINAL_RUNTIME,
            failure(&r)
        ),
    }
}

fn criterion_2() -> Line {
    let mut pairs = 0;
    let mut bad = Vec::new();
    for m in 1..=5 {
        for n in 1..=5 {
            pairs += 1;
            let i = brute_interval(m, n).len();
            let d = brute_monotone(n - 1, m - 1).len();
            let lib_i = interval_maps(ord(m), ord(n)).len();
            let lib_d = ord_maps(ord(n - 1), ord(m - 1)).len();
            if i != d || i != lib_i || d != lib_d {
                bad.push(format!("({m},{n}): {i} vs {d}"));
            }
        }
    }
    Line {
        pass: bad.is_empty(),
        text: format!("|I+([m],[n])| = |D+([n-1],[m-1])| for 1 <= m,n <= 5: {pairs} pairs exact {bad:?}"),
    }
}

fn criterion_3() -> Line {
    let r = check_itree_duality(&bounds("height=3,label=3"));
    let objects = r.counts["interval_objects"];
    Line {
        pass: r.pass && objects == ITREE_OBJECTS && r.counts["ordinal_objects"] == ITREE_OBJECTS,
        text: format!(
            "wedge.vee = Id, vee.wedge = Id, height <= 3, roots <= 3, cap 2000 per pair: {} (capped: {}){}",
            counts(&r),
            r.capped,
            failure(&r)
        ),
    }
}

fn criterion_4() -> Line {
    let start = Instant::now();
    let r = check_phi(&bounds("degree=2,label=3,height=3"));
    let elapsed = start.elapsed();
    Line {
        pass: r.pass && elapsed < PHI_RUNTIME,
        text: format!(
            "Phi hom-bijection, degree <= 2, fibers <= 3; phi.phi^-1 = Id, height <= 3: {} ({:.2?} < {:?}){}",
            counts(&r),
            elapsed,
            PHI_RUNTIME,
            failure(&r)
        ),
    }
}

fn criterion_5() -> Line {
    let r = check_gamma(&bounds("vertices=5"));
    let cards = enumerate_cardinals_brute(6).len();
    Line {
        pass: r.pass && cards == CARDINALS_UP_TO_6 && r.counts["cardinals"] as usize == CARDINALS_UP_TO_6,
        text: format!(
            "Gamma Gamma' = Id and Gamma' Gamma = Id, <= 6 vertices; hom counts, <= 5 vertices: {} (cardinals pinned {CARDINALS_UP_TO_6}){}",
            counts(&r),
            failure(&r)
        ),
    }
}

fn criterion_6() -> Line {
    let start = Instant::now();
    let r = check_L(&bounds("vertices=5,dim=3"));
    let mut oracle = true;
    for x in enumerate_cardinals_brute(5) {
        for n in 0..=3 {
            let fast: BTreeSet<_> = enumerate_cells(&x, n).into_iter().collect();
            let slow: BTreeSet<_> = enumerate_cells_brute(&x, n).unwrap().into_iter().collect();
            oracle &= fast == slow;
        }
    }
    let elapsed = start.elapsed();
    Line {
        pass: r.pass && oracle && elapsed < L_RUNTIME,
        text: format!(
            "L: proper/degenerate cell counts equal, L commutes with boundaries and composition, <= 5 vertices, n <= 3: {} (brute-force cells agree: {oracle}; {:.2?} < {:?}){}",
            counts(&r),
            elapsed,
            L_RUNTIME,
            failure(&r)
        ),
    }
}

fn criterion_7() -> Line {
    let r = check_omega_laws(&bounds("vertices=5,dim=3"));
    Line {
        pass: r.pass,
        text: format!(
            "unit, associativity, globularity, dom-sub, comp-sub, <= 5 vertices, n <= 3: {}{}",
            counts(&r),
            failure(&r)
        ),
    }
}

fn criterion_8() -> Line {
    let r = check_psi(&bounds("height=2,label=2"));
    Line {
        pass: r.pass,
        text: format!(
            "Psi full and faithful, hom counts equal, height <= 2, roots <= [2]: {}{}",
            counts(&r),
            failure(&r)
        ),
    }
}

fn criterion_9() -> Line {
    let r = check_xi(&bounds("degree=2,height=3,label=3"));
    Line {
        pass: r.pass,
        text: format!(
            "Xi hom-bijections (degree <= 2), surjective on objects (height <= 3), duality square: {}{}",
            counts(&r),
            failure(&r)
        ),
    }
}

fn criterion_10() -> Line {
    let run = || -> Result<Vec<(&'static str, bool)>, String> {
        let text = serde_json::to_string(&figure_example()).map_err(|e| e.to_string())?;
        let parsed: LabeledTree = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let violations = validate_cropped(&parsed);
        let tree = CroppedTree::new(parsed.clone()).map_err(|e| e.to_string())?;
        let h = xi(&tree);
        let dual = con_dualize(&tree);
        let k = vee(&h).map_err(|e| e.to_string())?;
        let g = upsilon(&k).map_err(|e| e.to_string())?;
        let x = gamma_prime(&g);
        Ok(vec![
            ("parses", parsed == figure_example()),
            ("cropped", violations.is_empty()),
            ("degree 4", tree.degree() == 4),
            ("xi^-1 xi", xi_inverse(&h) == tree),
            ("con con", con_dualize(&dual) == tree),
            ("square", xi(&dual) == k),
            ("wedge vee", wedge(&k).map_err(|e| e.to_string())? == h),
            ("ordinal flavor", k.flavor() == Flavor::Ordinal),
            ("upsilon' upsilon", upsilon_prime(&g) == k),
            ("gamma gamma'", gamma(&x) == g),
        ])
    };
    match run() {
        Ok(steps) => {
            let failed: Vec<&str> = steps.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            Line {
                pass: failed.is_empty(),
                text: format!(
                    "figure tree: parse, cropped, Xi_I, Con, vee, Upsilon, Gamma' and round trips ({} steps, failed {failed:?})",
                    steps.len()
                ),
            }
        }
        Err(e) => Line {
            pass: false,
            text: format!("figure tree: error {e}"),
        },
    }
}

fn main() {
    let criteria: [fn() -> Line; 10] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
    ];
    let mut all = true;
    for (i, c) in criteria.iter().enumerate() {
        let line = c();
        all &= line.pass;
        println!("criterion {:>2}: {} {}", i + 1, if line.pass { "PASS" } else { "FAIL" }, line.text);
    }
    if !all {
        std::process::exit(1);
    }
}
