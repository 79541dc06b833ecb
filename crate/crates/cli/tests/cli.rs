use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn kmodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmodes")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

/// 24 rows with a header, three attributes and a class column.
fn write_data(dir: &Path) -> PathBuf {
    let mut text = String::from("colour,shape,size,class\n");
    let colours = ["red", "green", "blue"];
    let shapes = ["round", "square"];
    let sizes = ["s", "m", "l", "xl"];
    for i in 0..24 {
        let colour = if i == 5 { "?" } else { colours[i % 3] };
        text.push_str(&format!(
            "{colour},{},{},c{}\n",
            shapes[(i / 3) % 2],
            sizes[(i * 5) % 4],
            i % 3
        ));
    }
    let path = dir.join("toy.csv");
    fs::write(&path, text).unwrap();
    path
}

fn read(dir: &Path, file: &str) -> String {
    fs::read_to_string(dir.join(file)).unwrap()
}

fn without_time(records: &str) -> Vec<String> {
    records
        .lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_string())
        .collect()
}

#[test]
fn run_all_initialisers() {
    let tmp = tempfile::tempdir().unwrap();
    let data = write_data(tmp.path());
    let out = tmp.path().join("run");
    let args = [
        "run",
        "--data",
        data.to_str().unwrap(),
        "--label-col",
        "class",
        "--init",
        "all",
        "--k",
        "3",
        "--reps",
        "4",
        "--seed",
        "7",
        "--out",
        out.to_str().unwrap(),
    ];
    let res = kmodes(&args);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    for f in [
        "records.csv",
        "summary.csv",
        "ecdf_initial.csv",
        "ecdf_final.csv",
        "scatter.csv",
        "ingest.json",
    ] {
        assert!(out.join(f).is_file(), "{f} missing");
    }
    let records = read(&out, "records.csv");
    assert_eq!(records.lines().count(), 1 + 4 * 4);
    let summary = read(&out, "summary.csv");
    let cao = summary.lines().find(|l| l.starts_with("cao,")).unwrap();
    assert_eq!(cao.matches("(0.000)").count(), 4, "{cao}");

    let ingest: serde_json::Value = serde_json::from_str(&read(&out, "ingest.json")).unwrap();
    assert_eq!(ingest["raw_n"], 24);
    assert_eq!(ingest["adjusted_n"], 23);
    assert_eq!(ingest["dropped_rows"], serde_json::json!([5]));

    // same invocation, same records apart from the time column
    let again = tmp.path().join("again");
    let mut args2 = args;
    args2[args2.len() - 1] = again.to_str().unwrap();
    assert_eq!(code(&kmodes(&args2)), 0);
    assert_eq!(without_time(&records), without_time(&read(&again, "records.csv")));
    assert_eq!(read(&out, "ecdf_final.csv"), read(&again, "ecdf_final.csv"));
}

#[test]
fn k_from_classes_and_knee() {
    let tmp = tempfile::tempdir().unwrap();
    let data = write_data(tmp.path());
    let data = data.to_str().unwrap();

    let out = tmp.path().join("classes");
    let res = kmodes(&[
        "run",
        "--data",
        data,
        "--label-col",
        "3",
        "--init",
        "cao",
        "--k",
        "classes",
        "--reps",
        "1",
        "--seed",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    assert!(read(&out, "records.csv")
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("toy,cao,3,"));

    let out = tmp.path().join("knee");
    let res = kmodes(&[
        "run",
        "--data",
        data,
        "--init",
        "matching",
        "--k",
        "knee",
        "--reps",
        "2",
        "--seed",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    assert!(out.join("cost_curve.csv").is_file());
}

#[test]
fn knee_command() {
    let tmp = tempfile::tempdir().unwrap();
    let data = write_data(tmp.path());
    let out = tmp.path().join("knee");
    let res = kmodes(&[
        "knee",
        "--data",
        data.to_str().unwrap(),
        "--k-max",
        "8",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    let curve = read(&out, "cost_curve.csv");
    assert_eq!(curve.lines().next().unwrap(), "k,cost");
    assert_eq!(curve.lines().count(), 1 + 7);
    let knee: serde_json::Value = serde_json::from_str(&read(&out, "knee.json")).unwrap();
    let k = knee["k"].as_u64().unwrap();
    assert!((2..=8).contains(&k));
    assert!(String::from_utf8_lossy(&res.stdout).contains(&format!("k = {k}")));
}

#[test]
fn fitness_command() {
    let tmp = tempfile::tempdir().unwrap();
    let data = write_data(tmp.path());
    let out = tmp.path().join("fit");
    let res = kmodes(&[
        "fitness",
        "--data",
        data.to_str().unwrap(),
        "--reps",
        "5",
        "--seed",
        "3",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&res), 0, "{}", String::from_utf8_lossy(&res.stderr));
    let report: serde_json::Value = serde_json::from_slice(&res.stdout).unwrap();
    assert_eq!(
        report["fitness"].as_i64().unwrap(),
        report["c_cao"].as_i64().unwrap() - report["c_match"].as_i64().unwrap()
    );
    let summary = read(&out, "component_summary.csv");
    assert!(summary.starts_with("dataset,variance,skewness,kurtosis,iqr,lower_decile,upper_decile\ntoy,"));
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let data = write_data(tmp.path());
    let data = data.to_str().unwrap();
    let out = tmp.path().join("o");
    let out = out.to_str().unwrap();
    let run = |init: &str, k: &str, path: &str| {
        code(&kmodes(&[
            "run", "--data", path, "--init", init, "--k", k, "--reps", "2", "--seed", "1", "--out", out,
        ]))
    };

    assert_eq!(run("cao", "2", "/nonexistent/data.csv"), 2);
    assert_eq!(run("kmeans", "2", data), 3);
    assert_eq!(run("cao", "100", data), 3);
    assert_eq!(run("cao", "classes", data), 3);
    assert_eq!(run("cao", "two", data), 3);
    assert_eq!(code(&kmodes(&["run", "--data", data])), 3);
    assert_eq!(
        code(&kmodes(&[
            "run",
            "--data",
            data,
            "--label-col",
            "label",
            "--init",
            "cao",
            "--k",
            "2",
            "--reps",
            "1",
            "--seed",
            "0",
            "--out",
            out
        ])),
        2
    );
    assert_eq!(code(&kmodes(&["--help"])), 0);
}
