//! Loading a JSON workspace and running commands on it, as the binary does.

use crossed_ext::cli::{parse_workspace, run_command, serialize_workspace, Command};

const DOC: &str = r#"{
  "field": "q",
  "algebras": [
    {"name": "aff", "brackets": [{"i": 0, "j": 1, "k": 1, "value": 1}], "dim": 2}
  ],
  "modules": [
    {"name": "k", "algebra": "aff", "dim": 1},
    {"name": "ad", "algebra": "aff", "adjoint": true}
  ],
  "crossed_modules": [
    {"name": "Id", "L": "aff", "V": "ad", "partial": [[1, 0], [0, 1]]}
  ],
  "commands": [
    {"command": "cohomology", "module": "k", "expect": [1, 1, 0]},
    {"command": "theta", "crossed_module": "Id"}
  ]
}"#;

fn main() {
    let ws = match parse_workspace(DOC) {
        Ok(ws) => ws,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let report = run_command(&ws, Command::Report);
    print!("{}", report.render_human());
    println!("\nnormalized document:\n{}", serialize_workspace(&ws));

    let broken = DOC.replace("\"algebra\": \"aff\", \"dim\": 1", "\"algebra\": \"bogus\", \"dim\": 1");
    println!("with a dangling reference: {}", parse_workspace(&broken).unwrap_err());
}
