#pragma once

#include <stdexcept>
#include <string>

namespace trigonal
{

// Caller violated a precondition (bad arguments, unknown symbol, wrong degree).
class usage_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// An invariant of the computation itself failed (bad curve data, convention violation).
class internal_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// Numerical procedure did not meet its tolerance.
class numeric_error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// sigma vanished at the requested point.
class divisor_error : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Malformed formula text; carries the 1-based position.
class parse_error : public usage_error
{
public:
    parse_error(const std::string &msg, std::size_t line, std::size_t column)
        : usage_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          m_line(line), m_column(column)
    {
    }

    std::size_t line() const noexcept
    {
        return m_line;
    }
    std::size_t column() const noexcept
    {
        return m_column;
    }

private:
    std::size_t m_line;
    std::size_t m_column;
};

} // namespace trigonal
