use std::process::{Command, Output};

const ARROW: &str = r#"{"kind":"cardinal","value":{"levels":[2,1],"src":[[0]],"tgt":[[1]]}}"#;

fn thetadisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetadisk"))
        .args(args)
        .env_remove("THETA_DISK_BOUNDS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn vee_of_three_is_two() {
    let o = thetadisk(&["convert", "--functor", "vee", r#"{"kind":"ordinal","value":3}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"kind\":\"ordinal\",\"value\":2}\n");
}

#[test]
fn arrow_cell_counts() {
    let o = thetadisk(&["cells", "--bounds", "dim=2", ARROW]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"kind\":\"cell_counts\",\"value\":[2,3,3]}\n");
}

#[test]
fn verify_all_passes_at_default_bounds() {
    let o = thetadisk(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 9);
    for l in &lines {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["pass"], true, "{l}");
    }
    assert_eq!(stdout(&thetadisk(&["verify", "--all"])), stdout(&o));
}

#[test]
fn parse_errors_exit_two() {
    assert_eq!(thetadisk(&["convert", "--functor", "vee", "{not json"]).status.code(), Some(2));
    assert_eq!(thetadisk(&["convert", "--functor", "vee", r#"{"kind":"nope","value":1}"#]).status.code(), Some(2));
    assert_eq!(thetadisk(&["convert", "--functor", "nope", ARROW]).status.code(), Some(2));
    assert_eq!(thetadisk(&["verify", "--bounds", "height=x"]).status.code(), Some(2));
    assert_eq!(thetadisk(&["verify", "no_such_check"]).status.code(), Some(2));
    assert_eq!(thetadisk(&["convert", "--functor", "phi", ARROW]).status.code(), Some(2));
}

#[test]
fn converted_output_reparses() {
    let g = thetadisk(&["convert", "--functor", "gamma", ARROW]);
    assert_eq!(g.status.code(), Some(0));
    let back = thetadisk(&["convert", "--functor", "gamma'", stdout(&g).trim()]);
    assert_eq!(stdout(&back).trim(), ARROW);
    let h = thetadisk(&["convert", "--functor", "upsilon'", stdout(&g).trim()]);
    let p = thetadisk(&["convert", "--functor", "psi", stdout(&h).trim()]);
    assert_eq!(p.status.code(), Some(0));
    assert!(stdout(&p).starts_with("{\"kind\":\"omega_category\""));
}

#[test]
fn hom_count_of_cardinals() {
    let o = thetadisk(&["hom-count", ARROW, ARROW]);
    assert_eq!(stdout(&o), "{\"kind\":\"hom_count\",\"value\":1}\n");
}

#[test]
fn bounds_come_from_the_environment_and_the_flag_wins() {
    let run = |env: &str, args: &[&str]| {
        let o = Command::new(env!("CARGO_BIN_EXE_thetadisk"))
            .args(args)
            .env("THETA_DISK_BOUNDS", env)
            .output()
            .unwrap();
        stdout(&o).lines().count()
    };
    assert_eq!(run("height=0", &["enumerate", "--kind", "interval-tree"]), 1);
    assert_eq!(run("height=1", &["enumerate", "--kind", "interval-tree"]), 2);
    assert_eq!(run("height=0", &["enumerate", "--kind", "interval-tree", "--bounds", "height=1"]), 2);
}

#[test]
fn render_dot_ranks_levels() {
    let o = thetadisk(&["enumerate", "--kind", "disk", "--bounds", "degree=2,label=3"]);
    let last = stdout(&o).lines().last().unwrap().to_string();
    let dot = thetadisk(&["render", "--format", "dot", &last]);
    let text = stdout(&dot);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("rank=same").count(), 3);
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("thetadisk-out-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = thetadisk(&["convert", "--functor", "wedge", "--out", p, r#"{"kind":"ordinal","value":1}"#]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "{\"kind\":\"ordinal\",\"value\":2}\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn help_documents_schemas() {
    let o = thetadisk(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("\"kind\""));
    assert!(text.contains("labeled_tree"));
    let c = thetadisk(&["convert", "--help"]);
    assert!(stdout(&c).contains("Example"));
}
