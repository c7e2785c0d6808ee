use std::process::Command;

use mediocre_cli::{run_trial, Algo, RunSpec};

fn mediocre(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mediocre"))
        .args(args)
        .env_remove("MEDIOCRE_THREADS")
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Field `name` of the single data row of a run report.
fn field(report: &str, name: &str) -> String {
    let mut lines = report.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    let at = header.iter().position(|h| *h == name).unwrap();
    row[at].to_string()
}

#[test]
fn run_yao_on_three_returns_the_median() {
    let (code, out, _) = mediocre(&[
        "run", "--algo", "yao", "--n", "3", "--i", "1", "--j", "1", "--seed", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "rank_from_bottom"), "1");
    assert_eq!(field(&out, "element"), "1");
    assert_eq!(field(&out, "mediocre"), "true");
}

#[test]
fn run_a1_reports_pairing_comparisons() {
    let (code, out, _) = mediocre(&[
        "run", "--algo", "a1", "--n", "12", "--i", "2", "--j", "7", "--seed", "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "mediocre"), "true");
    assert_eq!(field(&out, "grouping_comparisons"), "6");
}

#[test]
fn run_hyper_requires_group_size() {
    let args = ["run", "--algo", "hyper", "--n", "24", "--i", "2", "--j", "15"];
    let (code, _, err) = mediocre(&args);
    assert_eq!(code, 2);
    assert!(err.contains("--g"), "{err}");
    let (code, out, _) = mediocre(&[&args[..], &["--g", "4"]].concat());
    assert_eq!(code, 0);
    assert_eq!(field(&out, "grouping_comparisons"), "18");
    let (code, _, _) = mediocre(&["run", "--algo", "a1", "--n", "24", "--i", "2", "--j", "15", "--g", "4"]);
    assert_eq!(code, 2);
}

#[test]
fn run_names_the_violated_inequality() {
    let (code, _, err) = mediocre(&["run", "--algo", "yao", "--n", "3", "--i", "2", "--j", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("i + j + 1 <= n"), "{err}");
    // 16 + 2 * 16^(3/4) = 32 elements are needed
    let (code, _, err) = mediocre(&[
        "run", "--algo", "a2", "--n", "20", "--i", "8", "--j", "8", "--seed", "9",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("i + j + 2(i+j)^(3/4) <= n"), "{err}");
}

#[test]
fn run_a2_fail_exits_with_three() {
    let spec = RunSpec {
        algo: Algo::A2,
        n: 60,
        i: 8,
        j: 16,
        g: None,
        exact: Algo::A2.default_exact(),
    };
    let failing = (0..2000u64).find(|&s| run_trial(&spec, s).unwrap().failed).unwrap();
    let passing = (0..2000u64).find(|&s| !run_trial(&spec, s).unwrap().failed).unwrap();
    let args = |seed: String| {
        let mut a: Vec<String> = ["run", "--algo", "a2", "--n", "60", "--i", "8", "--j", "16", "--seed"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        a.push(seed);
        a
    };
    let fail_args = args(failing.to_string());
    let (code, out, err) = mediocre(&fail_args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, 3);
    assert_eq!(field(&out, "failed"), "true");
    assert_eq!(field(&out, "mediocre"), "false");
    assert!(err.contains("FAIL"));
    let pass_args = args(passing.to_string());
    let (code, out, _) = mediocre(&pass_args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, 0);
    assert_eq!(field(&out, "mediocre"), "true");
}

#[test]
fn tables() {
    let (code, out, _) = mediocre(&["table", "--which", "constants"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "0.1000,1.7500,1.7750"));
    let (_, out, _) = mediocre(&["table", "--which", "f"]);
    assert_eq!(out.lines().next(), Some("alpha,l,g_l,g_l1,f"));
    assert_eq!(out.lines().count(), 34);
    let (_, out, _) = mediocre(&["table", "--which", "hyper4", "--format", "csv"]);
    assert_eq!(out.lines().next(), Some("alpha,c_a4,c_yao4"));
    assert_eq!(out.lines().count(), 9);
    let (code, _, _) = mediocre(&["table", "--which", "g"]);
    assert_eq!(code, 2);
}

#[test]
fn lower_bounds() {
    assert_eq!(mediocre(&["lower-bound", "--i", "0", "--j", "0"]).1, "0\n");
    assert_eq!(mediocre(&["lower-bound", "--i", "1", "--j", "2"]).1, "4\n");
    // 21! / (10! 10!) = 21 * 184756 = 3879876, between 2^21 and 2^22
    assert_eq!(mediocre(&["lower-bound", "--i", "10", "--j", "10"]).1, "22\n");
    assert_eq!(mediocre(&["lower-bound", "--i", "-1", "--j", "2"]).0, 2);
}

#[test]
fn plot_data() {
    let (code, out, _) = mediocre(&["plot-data", "--from", "0.01", "--to", "0.33", "--step", "0.01"]);
    assert_eq!(code, 0);
    assert_eq!(out, mediocre(&["table", "--which", "constants"]).1);

    let (_, out, _) = mediocre(&["plot-data", "--from", "0.005", "--to", "0.325", "--step", "0.005"]);
    let rows: Vec<Vec<f64>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 65);
    assert!(rows.iter().all(|r| r.iter().all(|&x| x > 0.0)));
    assert!(rows.iter().all(|r| r[1] <= 2.0));

    let (code, _, _) = mediocre(&["plot-data", "--from", "0.2", "--to", "0.4", "--step", "0.01"]);
    assert_eq!(code, 2);
}

#[test]
fn bench_a1_pairing_portion() {
    let (code, out, _) = mediocre(&[
        "bench", "--algo", "a1", "--n", "10000", "--i", "1000", "--j", "6999", "--trials", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "mean_grouping_comparisons"), "4500.0000");
    assert_eq!(field(&out, "failure_rate"), "");
}

#[test]
fn bench_rows_replay_from_seeds() {
    let (code, out, _) = mediocre(&[
        "bench",
        "--algo",
        "a2lv",
        "--n",
        "3000",
        "--i",
        "1000",
        "--j",
        "1100",
        "--trials",
        "6",
        "--seed-base",
        "50",
        "--baseline",
        "fr-median",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[2].starts_with("fr-median,"));
    let mut total = 0u64;
    for seed in 50..56 {
        let (_, run, _) = mediocre(&[
            "run",
            "--algo",
            "a2lv",
            "--n",
            "3000",
            "--i",
            "1000",
            "--j",
            "1100",
            "--seed",
            &seed.to_string(),
        ]);
        total += field(&run, "comparisons").parse::<u64>().unwrap();
    }
    assert_eq!(field(&out, "mean_comparisons"), format!("{:.4}", total as f64 / 6.0));
}

#[test]
fn bench_rejects_bad_input() {
    let base = ["bench", "--algo", "yao", "--n", "100", "--i", "10", "--j", "10"];
    assert_eq!(mediocre(&[&base[..], &["--trials", "0"]].concat()).0, 2);
    let out = Command::new(env!("CARGO_BIN_EXE_mediocre"))
        .args(base)
        .env("MEDIOCRE_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
