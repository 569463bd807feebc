; saturating counter wraps from 10 back to 0
(declare-var x Int)
(init (= x 0))
(trans (or (and (< x 10) (= x' (+ x 1)))
           (and (= x 10) (= x' 0))))
(good (and (>= x 0) (<= x 10)))
