use std::process::{Command, Output};

use flagdom_cli::certificate::CertificateJson;
use flagdom_cli::commands::ChainRun;
use flagdom_cli::report::{EnumerationSummary, ReportRow, FIELDS};

fn flagdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagdom"))
        .args(args)
        .output()
        .expect("run flagdom")
}

fn stdout(args: &[&str]) -> String {
    let out = flagdom(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_examples() {
    let qq: ReportRow =
        serde_json::from_str(&stdout(&["classify", "--type", "A", "--rank", "2", "--labels", "Q,Q", "--format", "json"]))
            .unwrap();
    assert!(!qq.classical && qq.bracket_generating);
    assert_eq!((qq.f_dims, qq.dim_c_d, qq.dim_c_z, qq.depth), ([0, 0, 0], 3, 1, 2));

    let kq: ReportRow =
        serde_json::from_str(&stdout(&["classify", "--type", "A", "--rank", "2", "--labels", "K,Q", "--format", "json"]))
            .unwrap();
    assert!(kq.classical);
    assert_eq!((kq.f_dims, kq.depth), ([2, 4, 2], 3));
}

#[test]
fn invalid_input_exits_with_one() {
    for args in [
        &["classify", "--type", "A", "--rank", "2", "--labels", "V,V"][..],
        &["classify", "--type", "A", "--rank", "2", "--labels", "Q"],
        &["classify", "--type", "X", "--rank", "2", "--labels", "Q,Q"],
        &["enumerate", "--type", "E", "--rank", "5"],
        &["selftest", "--rank", "0"],
        &["chain", "--format", "csv"],
        &["nonsense"],
    ] {
        let out = flagdom(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    let out = flagdom(&["classify", "--type", "A", "--rank", "2", "--labels", "V,V"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("no noncompact simple root"));
}

#[test]
fn enumerate_examples() {
    let count = |t: &str, r: &str| -> EnumerationSummary {
        serde_json::from_str(&stdout(&["enumerate", "--type", t, "--rank", r, "--format", "json"])).unwrap()
    };
    let a1 = count("A", "1");
    assert_eq!((a1.valid_labelings, a1.classical_count), (1, 1));
    let c2 = count("C", "2");
    assert_eq!((c2.valid_labelings, c2.classical_count, c2.nonclassical_count), (5, 2, 3));
    let b4 = count("B", "4");
    assert_eq!(b4.valid_labelings, 81 - 16);
    assert_eq!(b4.classical_count + b4.nonclassical_count, b4.valid_labelings);
}

#[test]
fn json_round_trips_byte_for_byte() {
    let report = stdout(&["classify", "--type", "G", "--rank", "2", "--labels", "Q,K", "--format", "json"]);
    let parsed: ReportRow = serde_json::from_str(&report).unwrap();
    assert_eq!(flagdom_cli::report::to_json(&parsed), report);

    let summary = stdout(&["enumerate", "--type", "D", "--rank", "4", "--format", "json"]);
    let parsed: EnumerationSummary = serde_json::from_str(&summary).unwrap();
    assert_eq!(flagdom_cli::report::to_json(&parsed), summary);

    let chain = stdout(&["chain", "--seed", "4", "--pairs", "3", "--format", "json"]);
    let parsed: ChainRun = serde_json::from_str(&chain).unwrap();
    assert_eq!(flagdom_cli::report::to_json(&parsed), chain);
}

#[test]
fn csv_and_json_share_fields() {
    let csv = stdout(&["enumerate", "--type", "A", "--rank", "3", "--format", "csv"]);
    let json: EnumerationSummary =
        serde_json::from_str(&stdout(&["enumerate", "--type", "A", "--rank", "3", "--format", "json"])).unwrap();
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let header: Vec<String> = reader.headers().unwrap().iter().map(String::from).collect();
    assert_eq!(header, FIELDS);
    let value = serde_json::to_value(&json.rows[0]).unwrap();
    let mut keys: Vec<&String> = value.as_object().unwrap().keys().collect();
    keys.sort();
    let mut sorted = header.iter().collect::<Vec<_>>();
    sorted.sort();
    assert_eq!(keys, sorted);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), json.rows.len());
    for (rec, row) in records.iter().zip(&json.rows) {
        assert_eq!(rec.iter().collect::<Vec<_>>(), row.csv_record().iter().map(String::as_str).collect::<Vec<_>>());
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join(format!("flagdom-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("a3.json");
    let args = ["enumerate", "--type", "A", "--rank", "3", "--format", "json"];
    let out = flagdom(&[&args[..], &["--out", path.to_str().unwrap()]].concat());
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&args));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn chain_certificates_reverify_from_json() {
    let chain = stdout(&["chain", "--seed", "7", "--pairs", "20", "--format", "json"]);
    let run: ChainRun = serde_json::from_str(&chain).unwrap();
    assert_eq!(run.connected, 20);
    let params = flagdom_core::chainball::ChainParams::default();
    for c in &run.certificates {
        let cert = CertificateJson::to_certificate(c, params.tol_mem, params.tol_psd).unwrap();
        assert_eq!(cert.waypoints.len() + 1, c.k);
        flagdom_core::chainball::verify_certificate(&cert, &params).unwrap();
    }
}

#[test]
fn zero_step_bound_and_loose_tolerance() {
    let out = flagdom(&["chain", "--pairs", "1", "--kmax", "0", "--format", "json"]);
    assert_eq!(out.status.code(), Some(3));
    let run: ChainRun = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(run.failures.len(), 1);
    assert_eq!(run.failures[0].seed, flagdom_cli::commands::pair_seed(0, 0));

    let loose: ChainRun =
        serde_json::from_str(&stdout(&["chain", "--pairs", "5", "--tol", "1e-3", "--format", "json"])).unwrap();
    assert_eq!(loose.connected, 5);
    assert_eq!(loose.tol.0, 1e-3);
}

#[test]
fn selftest_passes_through_rank_two() {
    let text = stdout(&["selftest", "--rank", "2"]);
    assert!(text.lines().last().unwrap().ends_with("0 failed"));
    assert!(!text.contains("FAIL"));
}
