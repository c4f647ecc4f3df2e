use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const K33: &str = "EFz_";
const C5: &str = "Dhc";
const PETERSEN: &str = "IheA@GUAo";

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_bookram"))
        .args(args)
        .current_dir(root())
        .env_remove("BOOKRAM_DATA")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(args: &[&str], stdin: Option<&str>) -> i32 {
    run(args, stdin).status.code().unwrap()
}

fn json(args: &[&str], stdin: Option<&str>) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = run(&full, stdin);
    assert!(
        out.status.code().is_some_and(|c| c <= 1),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Timings vary between runs; everything else in a report is deterministic.
fn mask_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            for (k, x) in map.iter_mut() {
                if k == "elapsed_ms" {
                    *x = Value::Null;
                } else {
                    mask_timing(x);
                }
            }
        }
        Value::Array(xs) => xs.iter_mut().for_each(mask_timing),
        _ => {}
    }
}

/// Compares against `tests/golden/<name>.json`; `BLESS=1` rewrites it.
fn golden(name: &str, mut v: Value) {
    mask_timing(&mut v);
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap() + "\n").unwrap();
        return;
    }
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    let expected: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v, expected, "golden {name}");
}

fn temp_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bookram-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["bounds", "0", "3"], None), 2);
    assert_eq!(code(&["srg", "paley", "8"], None), 2);
    assert_eq!(code(&["bs", "-"], Some("not graph6 at all\n")), 3);
    assert_eq!(code(&["bs", "/no/such/file.g6"], None), 2);
    assert_eq!(code(&["search", "arrows", "6", "1", "1"], None), 0);
    assert_eq!(code(&["search", "arrows", "5", "1", "1"], None), 1);
    assert_eq!(code(&["search", "arrows", "11", "1", "4"], None), 2);
    assert_eq!(code(&["no-such-command"], None), 2);
    assert_eq!(code(&["--help"], None), 0);
}

#[test]
fn bounds_with_certificate() {
    let v = json(
        &["bounds", "2", "5", "--cert", "data/srg_15_6_1_3.g6"],
        None,
    );
    assert_eq!(
        (
            v["lower"].as_u64(),
            v["upper"].as_u64(),
            v["exact"].as_bool()
        ),
        (Some(16), Some(16), Some(true))
    );
    golden("bounds_2_5_cert", v);
    let v = json(&["bounds", "1", "1"], None);
    assert_eq!(
        (v["lower"].as_u64(), v["upper"].as_u64()),
        (Some(5), Some(6))
    );
    golden("bounds_1_1", v);
}

#[test]
fn book_sizes() {
    let bs = |g6: &str, extra: &[&str]| {
        let mut args = vec!["bs", "-"];
        args.extend_from_slice(extra);
        json(&args, Some(g6))
    };
    assert_eq!(bs(C5, &[])["book_size"], 0);
    assert_eq!(bs("E~~w", &[])["book_size"], 4);
    assert_eq!(bs(C5, &["--complement"])["book_size"], 0);
    let p13 = String::from_utf8(run(&["srg", "paley", "13"], None).stdout).unwrap();
    assert_eq!(bs(&p13, &[])["book_size"], 2);
    // plain output is the bare number
    assert_eq!(
        String::from_utf8(run(&["bs", "-"], Some(K33)).stdout)
            .unwrap()
            .trim(),
        "0"
    );
}

#[test]
fn counts() {
    let v = json(&["counts", "-"], Some(K33));
    assert_eq!(v["c4"], 9);
    assert_eq!(v["identity_residual"], 0);
    golden("counts_k33", v);
    assert_eq!(json(&["counts", "-"], Some("C~"))["k4"], 1);
    assert_eq!(json(&["counts", "-"], Some(PETERSEN))["c4"], 0);
}

#[test]
fn srg_commands() {
    let p9 = String::from_utf8(run(&["srg", "paley", "9"], None).stdout).unwrap();
    let v = json(&["srg", "verify", "-"], Some(&p9));
    golden("srg_verify_paley9", v);
    let v = json(&["srg", "certify", "data/srg_16_6_2_2.g6"], None);
    assert_eq!(
        (v["m"].as_u64(), v["n"].as_u64(), v["bound"].as_u64()),
        (Some(3), Some(5), Some(17))
    );
    golden("srg_certify_rook", v);
    // a non-strongly-regular graph is a negative answer, not an error
    assert_eq!(code(&["srg", "verify", "-"], Some(K33)), 0);
    assert_eq!(code(&["srg", "verify", "-"], Some(PETERSEN)), 0);
    assert_eq!(code(&["srg", "verify", "-"], Some("DQc")), 1);
}

#[test]
fn search_commands() {
    let v = json(&["search", "number", "1", "2"], None);
    assert_eq!(v["value"], 7);
    golden("search_number_1_2", v);

    let out = temp_path("w9.g6");
    let o = out.to_str().unwrap();
    let v = json(
        &["search", "witness", "9", "2", "2", "--seed", "1", "-o", o],
        None,
    );
    assert_eq!(v["found"], true);
    let g6 = std::fs::read_to_string(&out).unwrap();
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("json")).unwrap())
            .unwrap();
    assert_eq!(side["red_graph6"].as_str(), Some(g6.trim()));
    assert_eq!(
        (side["N"].as_u64(), side["m"].as_u64(), side["n"].as_u64()),
        (Some(9), Some(2), Some(2))
    );
    // the written colouring avoids both books
    let red = json(&["bs", "-"], Some(&g6));
    let blue = json(&["bs", "-", "--complement"], Some(&g6));
    assert!(red["book_size"].as_u64().is_none_or(|b| b < 2));
    assert!(blue["book_size"].as_u64().is_none_or(|b| b < 2));
    let _ = std::fs::remove_dir_all(out.parent().unwrap());
}

#[test]
fn extract_commands() {
    let big = json(&["extract", "-", "-m", "1"], Some(&k_ab(100, 100)));
    assert_eq!(big["result"]["kind"], "blue_book");
    assert!(big["result"]["witness"]["pages"].as_array().unwrap().len() >= 98);
    let k20 = json(&["extract", "-", "-m", "3"], Some(&complete(20)));
    assert_eq!(k20["result"]["kind"], "red_book");
    assert_eq!(
        k20["result"]["witness"]["pages"].as_array().unwrap().len(),
        18
    );
    let p9 = String::from_utf8(run(&["srg", "paley", "9"], None).stdout).unwrap();
    let v = json(&["extract", "-", "-m", "2"], Some(&p9));
    assert_eq!(v["result"]["kind"], "hypothesis_failed");
    golden("extract_paley9", v);
    golden(
        "extract_k25_25",
        json(&["extract", "-", "-m", "1"], Some(&k_ab(25, 25))),
    );
}

#[test]
fn aes_triples() {
    let t = |g6: &str| {
        let v = json(&["aes", "-"], Some(g6));
        [
            v["no_clique"].as_bool(),
            v["min_degree_above"].as_bool(),
            v["chromatic_at_least_r"].as_bool(),
        ]
    };
    let (yes, no) = (Some(true), Some(false));
    assert_eq!(t(K33), [yes, yes, no]);
    assert_eq!(t(C5), [yes, no, yes]);
    assert_eq!(t(PETERSEN), [yes, no, yes]);
    assert_eq!(code(&["aes", "-", "-r", "2"], Some(C5)), 2);
}

#[test]
fn repro_passes() {
    let out = run(&["--json", "repro"], None);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 16);
    golden("repro", v);
}

/// graph6 of `K_{a,b}` built by hand so the tests do not lean on the library.
fn k_ab(a: usize, b: usize) -> String {
    graph6(a + b, |u, v| (u < a) != (v < a))
}

fn complete(n: usize) -> String {
    graph6(n, |_, _| true)
}

fn graph6(n: usize, adj: impl Fn(usize, usize) -> bool) -> String {
    let mut s: Vec<u8> = if n <= 62 {
        vec![n as u8 + 63]
    } else {
        vec![
            126,
            ((n >> 12) & 63) as u8 + 63,
            ((n >> 6) & 63) as u8 + 63,
            (n & 63) as u8 + 63,
        ]
    };
    let bits: Vec<bool> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .map(|(u, v)| adj(u, v))
        .collect();
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            x |= (b as u8) << (5 - i);
        }
        s.push(x + 63);
    }
    String::from_utf8(s).unwrap()
}
