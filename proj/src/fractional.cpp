#include <efg/algebraic.hpp>
#include <efg/structural.hpp>

namespace efg
{
    // The covering LP  min sum x_I  s.t.  sum_{I ∋ v} x_I >= 1  over maximal
    // independent sets I is solved through its dual packing LP
    //   max sum y_v  s.t.  sum_{v ∈ I} y_v <= 1,  y >= 0,
    // whose slack basis is feasible from the start. Bland's rule keeps the
    // exact simplex from cycling; both optima coincide by strong duality.
    auto fractional_chromatic_number(const Graph & g) -> Rational
    {
        check_order(g.order());
        auto sets = maximal_independent_sets(g);
        int n = g.order();
        int m = static_cast<int>(sets.size());
        int columns = n + m;

        std::vector<std::vector<Rational>> tableau(m, std::vector<Rational>(columns + 1));
        std::vector<int> basis(m);
        for (int i = 0; i < m; ++i) {
            for (int v = 0; v < n; ++v)
                if ((sets[i] >> v) & 1u)
                    tableau[i][v] = 1;
            tableau[i][n + i] = 1;
            tableau[i][columns] = 1;
            basis[i] = n + i;
        }
        std::vector<Rational> objective(columns + 1);
        for (int v = 0; v < n; ++v)
            objective[v] = -1;

        while (true) {
            int enter = -1;
            for (int j = 0; j < columns; ++j)
                if (objective[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0)
                break;

            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < m; ++i) {
                if (tableau[i][enter] <= 0)
                    continue;
                Rational ratio = tableau[i][columns] / tableau[i][enter];
                if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0)
                throw Error("fractional colouring LP unbounded");

            Rational pivot = tableau[leave][enter];
            for (auto & x : tableau[leave])
                x /= pivot;
            for (int i = 0; i < m; ++i) {
                if (i == leave || tableau[i][enter] == 0)
                    continue;
                Rational f = tableau[i][enter];
                for (int j = 0; j <= columns; ++j)
                    tableau[i][j] -= f * tableau[leave][j];
            }
            Rational f = objective[enter];
            for (int j = 0; j <= columns; ++j)
                objective[j] -= f * tableau[leave][j];
            basis[leave] = enter;
        }
        return objective[columns];
    }
}
