#pragma once

#include <stdexcept>
#include <string>

namespace glasswing {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- image / io ---

class FileNotFound : public Error {
public:
    using Error::Error;
};

class DecodeError : public Error {
public:
    using Error::Error;
};

class EncodeError : public Error {
public:
    using Error::Error;
};

class AlphaOutOfRange : public Error {
public:
    using Error::Error;
};

class ToleranceOutOfRange : public Error {
public:
    using Error::Error;
};

class OutOfBounds : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// --- text embedding ---

class FontSizeTooSmall : public Error {
public:
    using Error::Error;
};

class TextDoesNotFit : public Error {
public:
    using Error::Error;
};

// --- oracles ---

class TransportError : public Error {
public:
    using Error::Error;
};

class QuotaExceeded : public Error {
public:
    using Error::Error;
};

class CacheMiss : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

// --- harness ---

class EmptyDataset : public Error {
public:
    using Error::Error;
};

class MixedOracles : public Error {
public:
    using Error::Error;
};

class NoRecords : public Error {
public:
    using Error::Error;
};

class NoRows : public Error {
public:
    using Error::Error;
};

} // namespace glasswing
