//! Writes every bundled fixture project, or prints one.
//!
//! `cargo run --example project_files -- sweedler` prints a single project;
//! `cargo run --example project_files -- --write <dir>` writes them all.

use gcenter::catalog::{fixture_project, FIXTURES};
use gcenter::project::{parse_project, serialize_project};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.as_slice() {
        [flag, dir] if flag == "--write" => {
            for stem in FIXTURES {
                let text = serialize_project(&fixture_project(stem).expect("known stem"));
                assert!(parse_project(&text).expect("round trip") == fixture_project(stem).unwrap());
                std::fs::write(format!("{dir}/{stem}.toml"), text).expect("writable directory");
            }
        }
        [stem] => match fixture_project(stem) {
            Some(p) => print!("{}", serialize_project(&p)),
            None => eprintln!("unknown fixture {stem}; known: {}", FIXTURES.join(", ")),
        },
        _ => eprintln!("usage: project_files <stem> | --write <dir>"),
    }
}
