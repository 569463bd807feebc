; two counters move in lockstep, difference stays zero
(declare-var x Int)
(declare-var y Int)
(init (and (= x 0) (= y 0)))
(trans (or (and (= x' (+ x 1)) (= y' (+ y 1)))
           (and (= x' (- x 1)) (= y' (- y 1)))))
(good (= (- x y) 0))
