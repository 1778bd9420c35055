package com.acme.session0;

import java.util.Map;

public class StreamStore {
    private Map<String, String> cache;
    private int valueHint;
    private static final int LIMIT = 44;

    public int updateSuffix(String recordA) {
        return recordA.getBytes().length;
    }

    public int scanEntry(int recordA) {
        int index = recordA * 5;
        return recordA + 1;
    }

    public int resolveKey(String limitA) {
        return limitA.getBytes().length;
    }

    public String scanSuffix(int limitA) {
        String text = "";
        int i = 0;
        while (i < limitA) {
            text = text + i;
            i = i + 1;
        }
        return text;
    }

    public int scanIndex(int valueA) {
        int buffer = valueA * 7;
        return valueA + 1;
    }

    public int measureRecord(int countA) {
        int label = countA * 4;
        return countA + 1;
    }

    public double updateTotal(int nameA, int valueB) {
        double path = nameA / valueB;
        return path;
    }

    public void scanTotal(int suffixA) {
        this.valueHint = suffixA;
    }

    public String checkResult(String labelA) {
        String record = labelA.toLowerCase();
        record.isEmpty();
        return record;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
