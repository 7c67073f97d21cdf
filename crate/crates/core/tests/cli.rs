use std::io::Write;
use std::process::{Command, Output, Stdio};

use treepack::graph::parse_graph6;

fn treepack(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_treepack"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn pack_edge_list_from_stdin() {
    let k4 = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    let o = treepack(&["pack", "-", "--k", "2"], Some(k4));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("tau=2"), "{text}");
    assert!(text.contains("k=2: yes"), "{text}");

    let o = treepack(&["pack", "-", "--csv"], Some(k4));
    assert_eq!(stdout(&o), "graph6,n,m,tau,arboricity\nC~,4,6,2,2\n");
}

#[test]
fn construct_book_graph() {
    let o = treepack(&["construct", "book", "--n", "13", "--delta", "4", "--i", "1"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_graph6(stdout(&o).trim()).unwrap().m(), 39);

    let o = treepack(&["construct", "join-candidate", "--n", "8", "--k", "2", "--format", "edgelist"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("8 14\n"));
}

#[test]
fn verify_family_mode_exits_zero() {
    let o = treepack(&["verify", "--statement", "T1.2", "--n", "13", "--delta", "4", "--k", "2", "--mode", "family"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("statement_id,n,delta,k_or_kappa,graph6"));
    assert!(text.lines().last().unwrap().starts_with("SUMMARY"));
    assert!(!text.contains(",COUNTEREXAMPLE,"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        vec!["nonsense"],
        vec!["pack"],
        vec!["analyze", "C~x"],
        vec!["verify", "--statement", "T9.9", "--n", "13", "--k", "2"],
        vec!["verify", "--statement", "T1.2", "--n", "13", "--delta", "4", "--k", "2", "--mode", "random"],
    ] {
        let o = treepack(&args, None);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(treepack(&["--help"], None).status.code(), Some(0));
}

#[test]
fn seeded_runs_are_reproducible() {
    let args = ["sweep", "--statement", "T1.2", "--n", "11..12", "--delta", "4", "--k", "2", "--mode", "random", "--samples", "20", "--seed", "7", "--jobs", "3"];
    let a = treepack(&args, None);
    let b = treepack(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let single = treepack(&[&args[..args.len() - 1], &["1"]].concat(), None);
    assert_eq!(stdout(&a), stdout(&single));
}

#[test]
fn rigidity_json() {
    let o = treepack(&["rigidity", "F~~~w", "--body-bar", "2", "--json"], None);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["rigidity"]["decision"], "RIGID");
    assert_eq!(v["rigidity"]["certificate"]["trees"].as_array().unwrap().len(), 3);
}
