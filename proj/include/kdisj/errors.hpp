#pragma once

#include <stdexcept>
#include <string>

namespace kdisj {

// Base for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Problems with the input data itself (bad CSV, broken survey structure).
struct DataError : Error {
    using Error::Error;
};

struct MissingAnswer : DataError {
    MissingAnswer(std::size_t row, std::string question)
        : DataError("missing answer at row " + std::to_string(row) + ", question '" + question + "'"),
          row(row), question(std::move(question)) {}
    std::size_t row;      // 1-based data row
    std::string question;
};

struct DuplicateId : DataError {
    explicit DuplicateId(const std::string& id)
        : DataError("duplicate individual id '" + id + "'"), id(id) {}
    std::string id;
};

struct EmptyDataset : DataError {
    using DataError::DataError;
};

struct CsvError : DataError {
    using DataError::DataError;
};

// A modality column nobody chose; its corrected entry would be 0/0.
struct UnusedModality : DataError {
    UnusedModality(std::string question, std::string label)
        : DataError("unused modality '" + label + "' of question '" + question + "'"),
          question(std::move(question)), label(std::move(label)) {}
    std::string question;
    std::string label;
};

// Numerical / algorithmic failures.
struct ComputeError : Error {
    using Error::Error;
};

struct ConvergenceFailure : ComputeError {
    using ComputeError::ComputeError;
};

struct DegenerateMCA : ComputeError {
    using ComputeError::ComputeError;
};

// Contract violations (bad indices, shape mismatches, empty slices).
struct InvalidArgument : Error {
    using Error::Error;
};

// File-level problems in the CLI layer.
struct IoError : Error {
    using Error::Error;
};

} // namespace kdisj
