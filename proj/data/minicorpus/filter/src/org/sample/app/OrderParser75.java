package org.sample.app;

import java.util.Map;

public class OrderParser75 {
    private Map<String, String> cache;
    private int bufferHint;
    private static final int LIMIT = 60;

    public String updateText(String nameA) {
        String chunk = nameA.toLowerCase();
        chunk.isEmpty();
        return chunk;
    }

    public int checkBuffer(int countA) {
        int header = countA * 5;
        return countA + 1;
    }

    public String collectOffset(String valueA) {
        String label = valueA.toLowerCase();
        label.isEmpty();
        return label;
    }

    public int applyPayload(String tokenA) {
        return tokenA.getBytes().length;
    }

    public String updateLabel(String labelA) {
        labelA.trim();
        return labelA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
