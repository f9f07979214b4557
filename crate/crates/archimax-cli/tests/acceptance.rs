//! Final acceptance check for the binary: repeated runs with fixed seeds
//! must produce byte-identical output in both formats. Run with
//! `--nocapture` to see the per-criterion verdict line.

use std::process::Command;

fn run(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_archimax"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().expect("no signal"), out.stdout)
}

#[test]
fn acceptance_10_cli_byte_determinism() {
    let command_lines: &[&[&str]] = &[
        &["check-generator", "--family", "gumbel", "--theta", "4", "--seed", "7"],
        &["check-generator", "--family", "pareto", "--theta", "8", "--format", "csv"],
        &["emit-curves", "--family", "gumbel", "--theta", "2.5", "--seed", "99"],
        &["emit-curves", "--family", "clayton", "--theta", "2", "--tail", "sum", "--format", "jsonl"],
        &["emit-curves", "--family", "joe", "--theta", "3", "--grid", "0.01:0.99:150:lin", "--n", "3"],
        &["theorem", "--theorem", "3.1", "--family", "gumbel", "--theta", "2", "--seed", "5"],
        &["theorem", "--theorem", "3.1", "--family", "gumbel", "--theta", "2", "--format", "csv"],
        &["theorem", "--theorem", "4.1", "--family", "gumbel", "--theta", "5", "--part", "lr"],
        &["theorem", "--theorem", "5.1", "--family", "pareto", "--theta", "4", "--part", "hr"],
    ];
    let mut identical = 0;
    for args in command_lines {
        let (first_code, first) = run(args);
        assert!(!first.is_empty(), "no output for {args:?}");
        for _ in 0..2 {
            let (code, bytes) = run(args);
            assert_eq!(code, first_code, "exit code drifted for {args:?}");
            assert_eq!(bytes, first, "output drifted for {args:?}");
        }
        identical += 1;
    }
    println!(
        "acceptance 10 (cli determinism): PASS - {identical} command lines, \
         each byte-identical across 3 runs in both formats"
    );
}
