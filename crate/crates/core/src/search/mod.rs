pub mod enumerate;
pub mod extremal;
pub mod par;
pub mod verify;
