use std::process::Command;

fn ramified(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ramified"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn exit_statuses() {
    assert_eq!(ramified(&["count", "PRJ", "6"]).0, 0);
    assert_eq!(ramified(&["count", "PRJ", "6"]).1, "7084\n");
    assert_eq!(ramified(&["verify", "tables"]).0, 0);
    assert_eq!(ramified(&["oeis", "A001764", "PRJ"]).0, 1);
    let (code, out, err) = ramified(&["count", "PRJ"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("Usage"));
}

#[test]
fn svg_output() {
    let dir = std::env::temp_dir().join(format!("ramified-svg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("x.svg");
    let lit = "n=3 shape {1,6}{2,3}{4,5} ties {1,6}{2,3,4,5}";
    let (code, _, _) = ramified(&["render", lit, "--svg", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    let first = std::fs::read_to_string(&path).unwrap();
    assert!(first.starts_with("<svg"));
    ramified(&["render", lit, "--svg", path.to_str().unwrap()]);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);
    std::fs::remove_dir_all(&dir).unwrap();
}
