#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efg
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class ParseError : public Error
    {
    public:
        ParseError(const std::string & what, std::size_t offset) :
            Error(what + " (at offset " + std::to_string(offset) + ")"),
            _offset(offset)
        {
        }

        auto offset() const -> std::size_t { return _offset; }

    private:
        std::size_t _offset;
    };

    class UnsupportedOrder : public Error
    {
    public:
        explicit UnsupportedOrder(int order) :
            Error("unsupported order " + std::to_string(order)),
            _order(order)
        {
        }

        auto order() const -> int { return _order; }

    private:
        int _order;
    };

    class UnknownColumn : public Error
    {
    public:
        UnknownColumn(const std::string & name, const std::string & valid) :
            Error("unknown column '" + name + "'; valid columns: " + valid),
            _name(name)
        {
        }

        auto name() const -> const std::string & { return _name; }

    private:
        std::string _name;
    };

    class BudgetExceeded : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };

    class DatabaseNotFound : public IoError
    {
    public:
        explicit DatabaseNotFound(const std::string & path) :
            IoError("database not found: " + path)
        {
        }
    };
}
