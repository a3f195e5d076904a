//! Session language and command dispatcher for the `kittab` binary.

pub mod acceptance;
pub mod exec;
pub mod session;

pub use exec::{run_session, CommandOutput, Payload};
pub use session::{parse_session, Session, Stmt};
