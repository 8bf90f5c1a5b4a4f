use std::process::Command;
use std::thread;

use opmono::cli::{run, EXIT_CAP, EXIT_MISMATCH, EXIT_OK, EXIT_USAGE};

fn opmono(args: &str) -> (i32, String, String) {
    let argv = std::iter::once("opmono").chain(args.split_whitespace());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn stdout(args: &str) -> String {
    let (code, out, err) = opmono(args);
    assert_eq!(code, EXIT_OK, "{args}: {err}");
    out
}

#[test]
fn counts() {
    assert_eq!(stdout("count --regime free --d 2 --r 2 --s 2,1"), "30\n");
    assert_eq!(stdout("count --regime c --d 2 --r 2 --s 2,1"), "18\n");
    assert_eq!(stdout("count --regime m --d 2 --r 2 --s 2,1"), "17\n");
    assert_eq!(stdout("count --regime cm --d 2 --r 2 --s 2,1"), "10\n");
}

#[test]
fn sequences() {
    assert_eq!(
        stdout("sequence --regime c --d 2 --ell 2 --terms 5"),
        "1 3 10 38 156\n"
    );
    assert_eq!(
        stdout("sequence --regime free --d 1 --ell 2 --terms 6"),
        "1 2 5 14 42 132\n"
    );
    assert_eq!(
        stdout("sequence --regime free --d 1 --ell 2 --terms 6 --raw-length"),
        "0 1 0 2 0 5\n"
    );
}

#[test]
fn bfiles_and_offsets() {
    assert_eq!(
        stdout("bfile --regime free --d 2 --ell 2 --terms 5"),
        "1 1\n2 3\n3 11\n4 45\n5 197\n"
    );
    let values: Vec<String> = stdout("bfile --regime c --d 4 --ell 1 --terms 6")
        .lines()
        .map(|l| l.split(' ').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values, ["1", "1", "5", "13", "35", "119"]);

    let one = stdout("bfile --regime m --d 3 --ell 2 --terms 8 --offset 1");
    let zero = stdout("bfile --regime m --d 3 --ell 2 --terms 9 --offset 0");
    let mut shifted = vec!["0 1".to_string()];
    shifted.extend(one.lines().map(|l| l.to_string()));
    assert_eq!(zero.lines().collect::<Vec<_>>(), shifted);
}

#[test]
fn listings_are_sorted_and_counted() {
    let out = stdout("enumerate --regime cm --d 2 --r 2 --s 2,1");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(
        stdout("enumerate --regime cm --d 2 --r 2 --s 2,1 --count-only"),
        "10\n"
    );
    assert_eq!(
        stdout("paths --regime c --d 2 --ell 3 --n 10 --check")
            .lines()
            .count(),
        21
    );
    assert_eq!(
        stdout("trees --regime c --d 3 --n 3 --check")
            .lines()
            .count(),
        16
    );
    assert_eq!(stdout("trees --d 3 --n 3").lines().count(), 19);
}

#[test]
fn structured_formats() {
    let json: serde_json::Value =
        serde_json::from_str(&stdout("--format json sequence --d 2 --ell 2 --terms 4")).unwrap();
    assert_eq!(json.to_string().matches("197").count(), 0);
    assert!(json.to_string().contains("45"));
    let csv = stdout("--format csv trees --d 1 --n 2");
    assert!(csv.lines().count() >= 3);
    let table = stdout("--format csv table --regime m --d 1 --r-max 2 --s-max 2");
    assert!(table.lines().next().unwrap().contains(','));
}

#[test]
fn growth_report() {
    let out = stdout("growth --regime free --d 2 --ell 2");
    assert!(out.starts_with("g\t2.414214\n"), "{out}");
    assert!(out.contains("method\texact-root"));
    let est = stdout("growth --regime m --d 2 --ell 2 --n 100");
    assert!(est.contains("method\tratio-estimate"));
    assert!(est.contains("n\t100"));
}

#[test]
fn series_methods() {
    let fixpoint = stdout("series --regime free --d 2 --ell 2 --order 12");
    assert_eq!(
        stdout("series --regime free --d 2 --ell 2 --order 12 --method closed"),
        fixpoint
    );
    assert_eq!(
        opmono("series --regime free --d 2 --ell 2 --order 12 --method euler").0,
        EXIT_USAGE
    );
    let euler = stdout("series --regime m --d 1 --ell 2 --order 8");
    assert!(euler.contains("8\t9"), "{euler}");
    assert!(fixpoint.contains("8\t45\n") && fixpoint.contains("10\t197\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(opmono("verify").0, EXIT_OK);
    assert_eq!(opmono("count --r 2").0, EXIT_USAGE);
    assert_eq!(opmono("frobnicate").0, EXIT_USAGE);
    assert_eq!(opmono("series --regime m --method closed").0, EXIT_USAGE);
    assert_eq!(
        opmono("enumerate --d 3 --r 6 --s 3,3,3 --cap 1000").0,
        EXIT_CAP
    );
}

#[test]
fn corrupted_fixture_fails_verification() {
    let dir = std::env::temp_dir().join(format!("opmono-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    let bad = dir.join("bad.txt");
    std::fs::write(&good, "t8 cm 4 2 1: 1,5,19,79,356\n").unwrap();
    std::fs::write(&bad, "# corrupted\nt8 cm 4 2 1: 1,5,19,79,357\n").unwrap();

    let (code, out, _) = opmono(&format!("verify {}", good.display()));
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out, _) = opmono(&format!("verify {}", bad.display()));
    assert_eq!(code, EXIT_MISMATCH);
    assert!(out.contains("MISMATCH") && out.contains("term 5"), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic_across_threads() {
    let commands = [
        "enumerate --regime m --d 2 --r 3 --s 1,1",
        "--format json table --regime cm --d 2 --r-max 3 --s-max 2,2",
        "paths --regime c --d 2 --ell 2 --n 10",
        "bfile --regime cm --d 3 --ell 2 --terms 15",
    ];
    let baseline: Vec<String> = commands.iter().map(|c| stdout(c)).collect();
    let handles: Vec<_> = (0..4)
        .map(|_| thread::spawn(move || commands.iter().map(|c| stdout(c)).collect::<Vec<_>>()))
        .collect();
    for h in handles {
        assert_eq!(h.join().unwrap(), baseline);
    }
}

#[test]
fn binary_runs_end_to_end() {
    let out = Command::new(env!("CARGO_BIN_EXE_opmono"))
        .args([
            "count", "--regime", "cm", "--d", "2", "--r", "2", "--s", "2,1",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "10\n");
    let status = Command::new(env!("CARGO_BIN_EXE_opmono"))
        .arg("nope")
        .output()
        .unwrap()
        .status;
    assert_eq!(status.code(), Some(EXIT_USAGE));
}
