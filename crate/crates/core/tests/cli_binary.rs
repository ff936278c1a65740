use std::process::Command;

fn threelimit(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_threelimit")).args(args).output().unwrap()
}

#[test]
fn unknown_verb_prints_usage_and_exits_2() {
    let out = threelimit(&["transmogrify"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
}

#[test]
fn validation_error_exits_2() {
    let out = threelimit(&["verify", "--identity", "prop_R", "--kmax", "40"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn out_flag_writes_file_and_nothing_to_stdout() {
    let path = std::env::temp_dir().join(format!("threelimit-q3-{}.json", std::process::id()));
    let out = threelimit(&["compute", "--poly", "Q", "--k", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    let q: threelimit::Polynomial = serde_json::from_str(&written).unwrap();
    assert_eq!(q, *threelimit::continuants::k_denominator(3).unwrap());
}

#[test]
fn help_goes_to_stdout() {
    let out = threelimit(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("compute"));
}
