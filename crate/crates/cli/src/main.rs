mod object;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use thetadisk::disk::{enumerate_disk_morphisms, enumerate_disks, phi_obj};
use thetadisk::globular::{enumerate_cardinals_brute, enumerate_glob_morphisms, GlobCard};
use thetadisk::itree::{count_morphisms, enumerate_objects, vee, vee_mor, wedge, wedge_mor, Flavor};
use thetadisk::labeled::{enumerate_cropped, enumerate_labeled_morphisms, xi, xi_inverse, CroppedTree, LabeledTree};
use thetadisk::ograph::{count_ograph_morphisms, enumerate_ographs, gamma, gamma_prime, upsilon, upsilon_prime};
use thetadisk::omega::{enumerate_cells, enumerate_omega_functors, l_functor, psi_mor, psi_obj};
use thetadisk::ordinal::{ord_maps, vee_map, vee_obj, wedge_map, wedge_obj};
use thetadisk::verify::{run_all, run_named, Bounds, CHECK_NAMES};

use object::{read_input, Object, SCHEMAS};

const BOUNDS_ENV: &str = "THETA_DISK_BOUNDS";

#[derive(Parser)]
#[command(
    name = "thetadisk",
    version,
    about = "Disks, inductive trees, globular cardinals and free ω-categories",
    after_help = SCHEMAS
)]
struct Cli {
    /// Bounds as height=..,degree=..,label=..,vertices=..,dim=..; overrides THETA_DISK_BOUNDS
    #[arg(long, global = true)]
    bounds: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output here instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    IntervalTree,
    OrdinalTree,
    Disk,
    Cardinal,
    Ograph,
    CroppedInterval,
    CroppedOrdinal,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Functor {
    Vee,
    Wedge,
    Phi,
    Gamma,
    #[value(name = "gamma'")]
    GammaPrime,
    Upsilon,
    #[value(name = "upsilon'")]
    UpsilonPrime,
    Xi,
    #[value(name = "L")]
    L,
    Psi,
}

#[derive(Subcommand)]
enum Verb {
    /// List the objects of a category within the bounds, one JSON object per line
    #[command(after_help = "Example: thetadisk enumerate --kind cardinal --bounds vertices=3")]
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Apply a functor to an object (inline JSON, a path, or - for stdin)
    #[command(after_help = concat!(
        "Example: thetadisk convert --functor vee '{\"kind\":\"ordinal\",\"value\":3}'\n",
        "prints {\"kind\":\"ordinal\",\"value\":2}\n\n",
        "vee, wedge: ordinal, interval_map / ordinal_map, itree, itree_morphism\n",
        "phi: disk -> itree      gamma: cardinal -> ograph    gamma': ograph -> cardinal\n",
        "upsilon: ordinal itree -> ograph    upsilon': ograph -> ordinal itree\n",
        "xi: cropped labeled_tree -> itree   L: cell -> enriched_cell\n",
        "psi: ordinal itree -> omega_category, ordinal itree_morphism -> functor"
    ))]
    Convert {
        #[arg(long, value_enum)]
        functor: Functor,
        input: Option<String>,
    },
    /// Size of the hom-set between two objects of the same kind
    #[command(after_help = concat!(
        "Kinds: ordinal (monotone maps), itree, disk, cardinal, ograph, labeled_tree, omega_category.\n",
        "Output: {\"kind\":\"hom_count\",\"value\":N}"
    ))]
    HomCount { dom: String, cod: String },
    /// Run verification checks; exits 1 if any check fails
    #[command(after_help = concat!(
        "Checks: ordinal_duality itree_duality phi gamma upsilon L psi xi omega_laws.\n",
        "Each report is one JSON line with keys bounds, capped, counterexample, counts, pass, theorem."
    ))]
    Verify {
        #[arg(long)]
        all: bool,
        names: Vec<String>,
    },
    /// Draw a tree-like object: itree, forest, disk or labeled_tree (--format dot|text)
    #[command(after_help = "DOT output puts each level on one rank, with fibers ordered left to right.")]
    Render { input: Option<String> },
    /// Number of cells of the free ω-category on a cardinal or ograph, per dimension up to dim
    #[command(after_help = concat!(
        "Example: thetadisk cells --bounds dim=2 '{\"kind\":\"cardinal\",\"value\":{\"levels\":[2,1],\"src\":[[0]],\"tgt\":[[1]]}}'\n",
        "prints {\"kind\":\"cell_counts\",\"value\":[2,3,3]}"
    ))]
    Cells { input: Option<String> },
}

enum Outcome {
    Done,
    ChecksFailed,
}

fn bounds(flag: Option<&str>) -> Result<Bounds> {
    let mut b = Bounds::default();
    if let Ok(env) = std::env::var(BOUNDS_ENV) {
        b = b.with_overrides(&env).with_context(|| format!("in {BOUNDS_ENV}"))?;
    }
    if let Some(spec) = flag {
        b = b.with_overrides(spec).context("in --bounds")?;
    }
    Ok(b)
}

fn parse_arg(arg: Option<&str>) -> Result<Object> {
    Object::parse(&read_input(arg)?)
}

fn json_lines(objects: impl IntoIterator<Item = Object>) -> String {
    objects.into_iter().map(|o| o.to_json() + "\n").collect()
}

fn enumerate(kind: Kind, b: &Bounds) -> Vec<Object> {
    let (h, l, d, v) = (b.max_height, b.max_label as i64, b.max_degree, b.max_vertices);
    match kind {
        Kind::IntervalTree => enumerate_objects(Flavor::Interval, h, l).into_iter().map(Object::Itree).collect(),
        Kind::OrdinalTree => enumerate_objects(Flavor::Ordinal, h, l).into_iter().map(Object::Itree).collect(),
        Kind::Disk => enumerate_disks(d, b.max_label).into_iter().map(Object::Disk).collect(),
        Kind::Cardinal => enumerate_cardinals_brute(v).into_iter().map(Object::Cardinal).collect(),
        Kind::Ograph => enumerate_ographs(v).into_iter().map(Object::Ograph).collect(),
        Kind::CroppedInterval => cropped(Flavor::Interval, d, l),
        Kind::CroppedOrdinal => cropped(Flavor::Ordinal, d, l),
    }
}

fn cropped(flavor: Flavor, d: usize, l: i64) -> Vec<Object> {
    enumerate_cropped(flavor, d, l)
        .into_iter()
        .map(|t| Object::LabeledTree(t.underlying().clone()))
        .collect()
}

fn convert(functor: Functor, input: Object) -> Result<Object> {
    use Object as O;
    let mismatch = |o: &Object| anyhow!("functor does not apply to kind `{}`", o.kind());
    Ok(match (functor, input) {
        (Functor::Vee, O::Ordinal(o)) => O::Ordinal(vee_obj(o)?),
        (Functor::Vee, O::IntervalMap(f)) => O::OrdinalMap(vee_map(&f)),
        (Functor::Vee, O::Itree(h)) => O::Itree(vee(&h)?),
        (Functor::Vee, O::ItreeMorphism(f)) => O::ItreeMorphism(vee_mor(&f)?),
        (Functor::Wedge, O::Ordinal(o)) => O::Ordinal(wedge_obj(o)),
        (Functor::Wedge, O::OrdinalMap(g)) => O::IntervalMap(wedge_map(&g)),
        (Functor::Wedge, O::Itree(h)) => O::Itree(wedge(&h)?),
        (Functor::Wedge, O::ItreeMorphism(f)) => O::ItreeMorphism(wedge_mor(&f)?),
        (Functor::Phi, O::Disk(d)) => O::Itree(phi_obj(&d)),
        (Functor::Gamma, O::Cardinal(x)) => O::Ograph(gamma(&x)),
        (Functor::GammaPrime, O::Ograph(g)) => O::Cardinal(gamma_prime(&g)),
        (Functor::Upsilon, O::Itree(h)) => O::Ograph(upsilon(&h)?),
        (Functor::UpsilonPrime, O::Ograph(g)) => O::Itree(upsilon_prime(&g)),
        (Functor::Xi, O::LabeledTree(t)) => O::Itree(xi(&CroppedTree::new(t)?)),
        (Functor::L, O::Cell(c)) => O::EnrichedCell(l_functor(&c)?),
        (Functor::Psi, O::Itree(h)) => O::OmegaCategory(psi_obj(&h)?),
        (Functor::Psi, O::ItreeMorphism(f)) => O::Functor(psi_mor(&f)?),
        (_, other) => return Err(mismatch(&other)),
    })
}

fn hom_count(dom: Object, cod: Object, b: &Bounds) -> Result<u128> {
    use Object as O;
    Ok(match (dom, cod) {
        (O::Ordinal(m), O::Ordinal(n)) => ord_maps(m, n).len() as u128,
        (O::Itree(h), O::Itree(k)) => count_morphisms(&h, &k),
        (O::Disk(a), O::Disk(c)) => enumerate_disk_morphisms(&a, &c).len() as u128,
        (O::Cardinal(x), O::Cardinal(y)) => enumerate_glob_morphisms(&x, &y).len() as u128,
        (O::Ograph(g), O::Ograph(h)) => count_ograph_morphisms(&g, &h),
        (O::LabeledTree(a), O::LabeledTree(c)) => {
            enumerate_labeled_morphisms(&CroppedTree::new(a)?, &CroppedTree::new(c)?).len() as u128
        }
        (O::OmegaCategory(a), O::OmegaCategory(c)) => {
            enumerate_omega_functors(&a, &c, b.max_dim.max(b.max_height) + 1)?.len() as u128
        }
        (a, c) => bail!("no hom-count for kinds `{}` and `{}`", a.kind(), c.kind()),
    })
}

fn level_text(t: &LabeledTree) -> String {
    let tree = t.tree();
    let mut out = String::new();
    for n in 0..tree.sizes().len() {
        let mut fibers: Vec<String> = Vec::new();
        if n == 0 {
            fibers.push(t.label(0, 0).to_string());
        } else {
            for y in 0..tree.level_size(n - 1) {
                let kids = tree.children(n - 1, y);
                fibers.push(kids.iter().map(|&x| t.label(n, x).to_string()).collect::<Vec<_>>().join(" "));
            }
        }
        out.push_str(&format!("{n}: {}\n", fibers.join(" | ")));
    }
    out
}

fn forest_text(sizes: &[usize], children: impl Fn(usize, usize) -> Vec<usize>) -> String {
    let mut out = String::new();
    for (n, &k) in sizes.iter().enumerate() {
        if n == 0 {
            out.push_str(&format!("0: {}\n", (0..k).map(|x| x.to_string()).collect::<Vec<_>>().join(" ")));
            continue;
        }
        let fibers: Vec<String> = (0..sizes[n - 1])
            .map(|y| children(n - 1, y).iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        out.push_str(&format!("{n}: {}\n", fibers.join(" | ")));
    }
    out
}

fn render(o: Object, format: Format) -> Result<String> {
    use Object as O;
    let dot = format == Format::Dot;
    Ok(match o {
        O::Itree(h) => {
            let t = xi_inverse(&h);
            if dot {
                t.underlying().to_dot()
            } else {
                format!("{h}\n{}", level_text(t.underlying()))
            }
        }
        O::LabeledTree(t) if dot => t.to_dot(),
        O::LabeledTree(t) => level_text(&t),
        O::Disk(d) if dot => d.to_dot(),
        O::Disk(d) => forest_text(d.tree().sizes(), |n, y| d.fiber(n, y)),
        O::Forest(f) if dot => f.to_dot(|_, x| x.to_string()),
        O::Forest(f) => forest_text(f.sizes(), |n, y| f.children(n, y)),
        other => bail!("cannot render kind `{}`", other.kind()),
    })
}

fn cell_counts(o: Object, b: &Bounds) -> Result<Vec<usize>> {
    let x: GlobCard = match o {
        Object::Cardinal(x) => x,
        Object::Ograph(g) => gamma_prime(&g),
        other => bail!("cells expects a cardinal or ograph, got `{}`", other.kind()),
    };
    Ok((0..=b.max_dim).map(|n| enumerate_cells(&x, n).len()).collect())
}

fn run(cli: Cli) -> Result<(String, Outcome)> {
    let b = bounds(cli.bounds.as_deref())?;
    let text = cli.format == Format::Text;
    let output = match cli.verb {
        Verb::Enumerate { kind } => {
            let objs = enumerate(kind, &b);
            if text {
                objs.iter().map(|o| text_of(o) + "\n").collect()
            } else {
                json_lines(objs)
            }
        }
        Verb::Convert { functor, input } => {
            let out = convert(functor, parse_arg(input.as_deref())?)?;
            if text {
                text_of(&out) + "\n"
            } else {
                out.to_json() + "\n"
            }
        }
        Verb::HomCount { dom, cod } => {
            let n = hom_count(parse_arg(Some(&dom))?, parse_arg(Some(&cod))?, &b)?;
            if text {
                format!("{n}\n")
            } else {
                json!({ "kind": "hom_count", "value": n as u64 }).to_string() + "\n"
            }
        }
        Verb::Verify { all, names } => {
            let reports = if all || names.is_empty() {
                run_all(&b)
            } else {
                names
                    .iter()
                    .map(|n| {
                        run_named(n, &b).ok_or_else(|| anyhow!("unknown check `{n}`; known: {}", CHECK_NAMES.join(" ")))
                    })
                    .collect::<Result<Vec<_>>>()?
            };
            let failed = reports.iter().any(|r| !r.pass);
            let body = reports
                .iter()
                .map(|r| {
                    if text {
                        format!("{} {}\n", if r.pass { "PASS" } else { "FAIL" }, r.theorem)
                    } else {
                        r.to_json_line() + "\n"
                    }
                })
                .collect();
            return Ok((body, if failed { Outcome::ChecksFailed } else { Outcome::Done }));
        }
        Verb::Render { input } => {
            let format = if cli.format == Format::Json { Format::Dot } else { cli.format };
            render(parse_arg(input.as_deref())?, format)?
        }
        Verb::Cells { input } => {
            let counts = cell_counts(parse_arg(input.as_deref())?, &b)?;
            if text {
                counts.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ") + "\n"
            } else {
                json!({ "kind": "cell_counts", "value": counts }).to_string() + "\n"
            }
        }
    };
    Ok((output, Outcome::Done))
}

fn text_of(o: &Object) -> String {
    match o {
        Object::Ordinal(x) => x.to_string(),
        Object::Itree(h) => h.to_string(),
        Object::Ograph(g) => g.to_string(),
        other => other.to_json(),
    }
}

fn emit(out: Option<&str>, body: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {path}")),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let out = cli.out.clone();
    match run(cli).and_then(|(body, outcome)| emit(out.as_deref(), &body).map(|_| outcome)) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
