use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

/// Exact toric geometry computations on JSON requests.
#[derive(Parser)]
#[command(name = "toric-kernel", version, after_help = "Commands:\n  cone dual|rays|hilbert-basis|is-smooth|is-simplicial|faces\n  polytope facets|lattice-points|volume|normalized-volume|ehrhart|minkowski|mixed-volume|is-normal|is-very-ample|project-full\n  fan validate|normal-fan|is-complete|is-smooth|is-simplicial|star-subdivide|product|limit-cone|star-quotient|orbits|compatible\n  ideal toric|member|hilbert-function\n  divisor class-group|picard-group|is-cartier|min-cartier-multiple|sections|from-polytope|polyhedron|lin-equiv\n  cox data|irrelevant|primitive-collections|degree|homogenize|dehomogenize\n  count kushnirenko|bkk|bezout")]
struct Args {
    /// Command group, e.g. `cone`.
    group: String,
    /// Operation within the group, e.g. `hilbert-basis`.
    op: String,
    /// Request file; standard input when omitted or `-`.
    input: Option<PathBuf>,
    /// Indent the JSON output.
    #[arg(long)]
    pretty: bool,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let text = match args.input.as_deref() {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map(|_| s)
        }
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => {
            eprintln!("toric-kernel: cannot read request: {e}");
            return ExitCode::from(2);
        }
    };
    let command = format!("{} {}", args.group, args.op);
    let (code, value) = toric_kernel::execute(&command, &text);
    print!("{}", toric_kernel::render(&value, args.pretty));
    ExitCode::from(code as u8)
}
